#include "fivesel/cusp.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "fivesel/screens.hpp"

namespace fivesel {

namespace {

int a12_index() { return *symbol_from_name("a12"); }

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// "a35^4.12" or bare "a35" (exponent 1); exponent must be > 0
void add_monomial_token(Monomial& m, const std::string& tok, int line_no) {
  auto caret = tok.find('^');
  std::string name = tok.substr(0, caret);
  auto sym = symbol_from_name(name);
  if (!sym)
    throw std::invalid_argument("certificate line " + std::to_string(line_no) +
                                ": bad variable '" + name + "'");
  Rat exp = 1;
  if (caret != std::string::npos) {
    auto e = parse_rat(tok.substr(caret + 1));
    if (!e)
      throw std::invalid_argument("certificate line " + std::to_string(line_no) +
                                  ": bad exponent in '" + tok + "'");
    exp = *e;
  }
  if (exp <= 0)
    throw std::invalid_argument("certificate line " + std::to_string(line_no) +
                                ": nonpositive exponent in '" + tok + "'");
  if (!m.emplace(*sym, exp).second)
    throw std::invalid_argument("certificate line " + std::to_string(line_no) +
                                ": duplicate variable '" + name + "'");
}

Monomial parse_monomial(std::string_view s, int line_no) {
  Monomial m;
  for (const auto& tok : split_ws(s)) add_monomial_token(m, tok, line_no);
  return m;
}

const std::array<SymbolSet, 13>& prune_sets() {
  static const std::array<SymbolSet, 13> sets = [] {
    std::array<SymbolSet, 13> out;
    const auto& src = reducibility_sets();
    for (int k = 0; k < 13; ++k)
      for (int sym : src[k]) out[k].set(sym);
    return out;
  }();
  return sets;
}

bool subset(const SymbolSet& a, const SymbolSet& b) { return (a & ~b).none(); }

std::string wv_component_string(const Rat& value) {
  return fraction_string(value) + " (" + decimal_string(value, 6) + ")";
}

}  // namespace

std::vector<CuspCertificate> parse_certificates(std::string_view text) {
  std::vector<CuspCertificate> out;
  CuspCertificate cur;
  bool open = false, have_gap = false;

  auto flush = [&] {
    if (!open) return;
    if (!have_gap)
      throw std::invalid_argument("certificate case " +
                                  std::to_string(cur.case_id) + ": missing gap");
    out.push_back(cur);
    cur = CuspCertificate{};
    have_gap = false;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string_view s(line.data() + first, last - first + 1);
    if (s.front() == '#') continue;

    if (s.front() == '[') {
      if (s.substr(0, 6) != "[case " || s.back() != ']')
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": bad case header");
      flush();
      open = true;
      auto id = parse_rat(s.substr(6, s.size() - 7));
      if (!id || id->get_den() != 1 || *id < 1)
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": bad case number");
      cur.case_id = static_cast<int>(id->get_num().get_si());
      continue;
    }
    if (!open)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": content before first [case N]");

    auto eq = s.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected 'key = value'");
    auto key_toks = split_ws(s.substr(0, eq));
    std::string_view value = s.substr(eq + 1);

    if (key_toks.size() == 1 && key_toks[0] == "Z") {
      for (const auto& tok : split_ws(value)) {
        auto sym = symbol_from_name(tok);
        if (!sym)
          throw std::invalid_argument("line " + std::to_string(line_no) +
                                      ": bad variable '" + tok + "' in Z");
        cur.Z.set(*sym);
      }
    } else if (key_toks.size() == 1 && key_toks[0] == "gap") {
      auto toks = split_ws(value);
      std::optional<Rat> g;
      if (toks.size() == 1) g = parse_rat(toks[0]);
      if (!g)
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": bad gap value");
      cur.claimed_gap = *g;
      have_gap = true;
    } else if (key_toks.size() == 1 && key_toks[0] == "pi") {
      cur.pi = parse_monomial(value, line_no);
    } else if (key_toks.size() == 2 && key_toks[0] == "piu") {
      auto u = symbol_from_name(key_toks[1]);
      if (!u)
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": bad piu variable '" + key_toks[1] + "'");
      if (!cur.pi_u.emplace(*u, parse_monomial(value, line_no)).second)
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": duplicate piu for '" + key_toks[1] + "'");
    } else {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": unrecognized line");
    }
  }
  flush();
  return out;
}

CheckReport verify_pi(const CuspCertificate& c) {
  CheckReport r;
  std::string tag = "case " + std::to_string(c.case_id) + ": ";

  if (!c.Z.test(a12_index())) r.fail(tag + "a12 not in Z");
  for (const auto& [sym, exp] : c.pi) {
    (void)exp;
    if (c.Z.test(sym)) r.fail(tag + "pi uses " + symbol_name(sym) + " inside Z");
  }

  // (i) measure + w(pi) + sum over the complement of Z
  WeightVector total = wv_add(measure_vector(), weight(c.pi));
  for (int u = 0; u < kNumSymbols; ++u)
    if (!c.Z.test(u)) total = wv_add(total, weight(u));
  for (int k = 0; k < 8; ++k)
    if (total[k] >= 0)
      r.fail(tag + "pi-factor exponent of s" + std::to_string(k + 1) + " is " +
             wv_component_string(total[k]) + ", not negative");

  // (ii) recomputed gap
  Rat gap = Rat(static_cast<long>(c.Z.count())) - degree(c.pi);
  if (gap != c.claimed_gap)
    r.fail(tag + "#Z - deg(pi) = " + fraction_string(gap) + " but claimed gap is " +
           fraction_string(c.claimed_gap));

  // (iii) the exponent saving that yields the X^(499/600) bound
  if (c.claimed_gap < Rat(1, 10))
    r.fail(tag + "gap " + fraction_string(c.claimed_gap) + " below 1/10");

  return r;
}

CheckReport verify_pi_u(const CuspCertificate& c) {
  CheckReport r;
  std::string tag = "case " + std::to_string(c.case_id) + ": ";

  SymbolSet expected = c.Z;
  expected.reset(a12_index());

  for (int u = 0; u < kNumSymbols; ++u)
    if (expected.test(u) && !c.pi_u.count(u))
      r.fail(tag + "missing pi_u for " + symbol_name(u));

  Monomial consumed;
  for (const auto& [u, mon] : c.pi_u) {
    std::string utag = tag + "pi_u[" + symbol_name(u) + "]: ";
    if (!expected.test(u)) {
      r.fail(utag + "u is not in Z \\ {a12}");
      continue;
    }
    // (i) support outside Z (positive exponents are enforced by the parser)
    for (const auto& [sym, exp] : mon) {
      if (c.Z.test(sym)) r.fail(utag + "uses " + symbol_name(sym) + " inside Z");
      consumed[sym] += exp;
    }
    // (ii) w(u) - w(pi_u) componentwise <= 0
    WeightVector diff = wv_sub(weight(u), weight(mon));
    for (int k = 0; k < 8; ++k)
      if (diff[k] > 0)
        r.fail(utag + "w(u/pi_u) exponent of s" + std::to_string(k + 1) + " is " +
               wv_component_string(diff[k]) + ", positive");
  }

  // (iii) pi / prod pi_u has nonnegative exponents
  for (const auto& [sym, total] : consumed) {
    auto it = c.pi.find(sym);
    Rat have = it == c.pi.end() ? Rat(0) : it->second;
    if (have < total)
      r.fail(tag + "budget of " + symbol_name(sym) + " exceeded: pi has " +
             fraction_string(have) + ", helpers consume " + fraction_string(total));
  }

  return r;
}

const std::array<SymbolSet, 10>& cover_sets() {
  static const std::array<SymbolSet, 10> sets = [] {
    auto from_names = [](std::initializer_list<const char*> names) {
      SymbolSet z;
      for (const char* n : names) z.set(*symbol_from_name(n));
      return z;
    };
    std::array<SymbolSet, 10> out;
    out[0] = from_names({"a12", "a13", "a14", "a15", "a23", "a24", "a25", "a34",
                         "b12", "b13", "b14", "b15", "b23", "b24", "c12", "c13",
                         "c14", "c23", "d12"});
    out[1] = from_names({"a12", "a13", "a14", "a15", "a23", "a24", "a25", "a34",
                         "b12", "b13", "b14", "b15", "b23", "b24", "c12", "c13",
                         "c14", "d12", "d13"});
    out[2] = from_names({"a12", "a13", "a14", "a15", "a23", "a24", "a25", "a34",
                         "b12", "b13", "b14", "b15", "b23", "b24", "c12", "c13",
                         "c23", "d12", "d13"});
    out[3] = from_names({"a12", "a13", "a14", "a15", "a23", "a24", "a25", "a34",
                         "b12", "b13", "b14", "b15", "b23", "c12", "c13", "c14",
                         "c23", "d12", "d13"});
    out[4] = from_names({"a12", "a13", "a14", "a15", "a23", "a24", "a25", "a34",
                         "b12", "b13", "b14", "b23", "b24", "c12", "c13", "c14",
                         "c23", "d12", "d13"});
    out[5] = from_names({"a12", "a13", "a14", "a15", "a23", "a24", "a25", "b12",
                         "b13", "b14", "b15", "b23", "b24", "c12", "c13", "c14",
                         "c23", "d12", "d13"});
    out[6] = from_names({"a12", "a13", "a14", "a15", "a23", "a24", "a34", "b12",
                         "b13", "b14", "b15", "b23", "b24", "c12", "c13", "c14",
                         "c23", "d12", "d13"});
    out[7] = from_names({"a12", "a13", "a14", "a15", "a23", "a24", "a34", "b12",
                         "b13", "b14", "b15", "b23", "c12", "c13", "c14", "c23",
                         "d12", "d13", "e12"});
    out[8] = from_names({"a12", "a13", "a14", "a15", "a23", "a24", "a34", "b12",
                         "b13", "b14", "b23", "b24", "c12", "c13", "c14", "c23",
                         "d12", "d13", "e12"});
    out[9] = from_names({"a12", "a13", "a14", "a15", "a23", "a24", "a25", "a34",
                         "a35", "b12", "b13", "b14", "b15", "b23", "b24", "c12",
                         "c13", "c14", "d12"});
    return out;
  }();
  return sets;
}

std::vector<SymbolSet> generate_partition() {
  std::vector<SymbolSet> out;
  std::unordered_set<unsigned long long> seen;
  std::deque<SymbolSet> queue;

  SymbolSet seed;
  seed.set(a12_index());
  queue.push_back(seed);
  seen.insert(seed.to_ullong());

  while (!queue.empty()) {
    SymbolSet z = queue.front();
    queue.pop_front();
    out.push_back(z);
    for (int u : minimal_complement(z)) {
      SymbolSet child = z;
      child.set(u);
      bool pruned = false;
      for (const auto& bad : prune_sets())
        if (subset(bad, child)) {
          pruned = true;
          break;
        }
      if (pruned) continue;
      if (seen.insert(child.to_ullong()).second) queue.push_back(child);
    }
  }
  return out;
}

CoverReport check_cover(const std::vector<SymbolSet>& sets) {
  CoverReport r;
  const auto& covers = cover_sets();
  for (const auto& z : sets) {
    int found = 0;
    for (int k = 0; k < 10 && !found; ++k)
      if (subset(z, covers[k])) found = k + 1;
    r.cover_index.push_back(found);
    if (!found) {
      r.ok = false;
      r.uncovered.push_back(z);
    }
  }
  return r;
}

bool discriminant_multidegree_check(const std::map<int, long>& m) {
  long total = 0;
  for (const auto& [sym, exp] : m) {
    if (exp < 0) throw std::invalid_argument("multidegree: negative exponent");
    (void)sym;
    total += exp;
  }
  if (total != 60)
    throw std::invalid_argument("multidegree: total degree " +
                                std::to_string(total) + ", expected 60");
  long letters[5] = {0, 0, 0, 0, 0}, indices[6] = {0, 0, 0, 0, 0, 0};
  for (const auto& [sym, exp] : m) {
    letters[symbol_letter(sym)] += exp;
    auto [i, j] = symbol_pair(sym);
    indices[i] += exp;
    indices[j] += exp;
  }
  for (int l = 0; l < 5; ++l)
    if (letters[l] != 12) return false;
  for (int i = 1; i <= 5; ++i)
    if (indices[i] != 24) return false;
  return true;
}

std::string symbol_set_names(const SymbolSet& Z) {
  std::string out;
  for (int s = 0; s < kNumSymbols; ++s)
    if (Z.test(s)) {
      if (!out.empty()) out += ' ';
      out += symbol_name(s);
    }
  return out;
}

}  // namespace fivesel
