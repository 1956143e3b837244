#include "fivesel/tables.hpp"

#include <sstream>
#include <stdexcept>

#include "fivesel/io.hpp"

namespace fivesel {

namespace {

constexpr long kBigV = 1L << 40;  // stands in for "valuation beyond the cap"

long parse_long(const std::string& tok) {
  size_t used = 0;
  long v = std::stol(tok, &used);
  if (used != tok.size()) throw std::invalid_argument("trailing characters");
  return v;
}

ValCond parse_valcond(const std::string& tok) {
  if (tok.rfind(">=", 0) == 0) return {false, parse_long(tok.substr(2))};
  if (tok.rfind('=', 0) == 0) return {true, parse_long(tok.substr(1))};
  throw std::invalid_argument("valuation condition must be =k or >=k");
}

ExtraCond parse_extracond(const std::string& tok) {
  using Kind = ExtraCond::Kind;
  if (tok == "-") return {Kind::None, 0};
  if (tok.rfind("v=", 0) == 0) return {Kind::Exact, parse_long(tok.substr(2))};
  if (tok.rfind("even>=", 0) == 0)
    return {Kind::EvenGE, parse_long(tok.substr(6))};
  if (tok.rfind("odd>=", 0) == 0)
    return {Kind::OddGE, parse_long(tok.substr(5))};
  throw std::invalid_argument("extra condition must be -, v=k, even>=k or odd>=k");
}

bool val_matches(const ValCond& c, long v) {
  return c.exact ? v == c.k : v >= c.k;
}

bool extra_matches(const ExtraCond& c, long vD) {
  using Kind = ExtraCond::Kind;
  switch (c.kind) {
    case Kind::None:
      return true;
    case Kind::Exact:
      return vD == c.v;
    case Kind::EvenGE:
      return vD >= c.v && vD % 2 == 0;
    case Kind::OddGE:
      return vD >= c.v && vD % 2 == 1;
  }
  return false;
}

bool row_matches(const DensityTableRow& r, long vA, long vB, long vD) {
  return val_matches(r.vA, vA) && val_matches(r.vB, vB) &&
         extra_matches(r.extra, vD);
}

// Whether two conditions admit a common valuation.
bool val_compatible(const ValCond& x, const ValCond& y) {
  if (x.exact && y.exact) return x.k == y.k;
  if (x.exact) return x.k >= y.k;
  if (y.exact) return y.k >= x.k;
  return true;
}

bool extra_compatible(const ExtraCond& x, const ExtraCond& y) {
  using Kind = ExtraCond::Kind;
  if (x.kind == Kind::None || y.kind == Kind::None) return true;
  if (x.kind == Kind::Exact) return extra_matches(y, x.v);
  if (y.kind == Kind::Exact) return extra_matches(x, y.v);
  if (x.kind == y.kind) return true;
  return false;  // one even, one odd
}

Rat exact_rat(long long num, long long den) {
  Rat r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

// Largest multiple of 1/10^4 not exceeding x.
Rat floor4(const Rat& x) {
  Int scaled = x.get_num() * 10000;
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
  Rat r(q, 10000);
  r.canonicalize();
  return r;
}

long v2_of(long long n) {
  long v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

long v3_of(long long n) {
  long v = 0;
  while (n % 3 == 0) {
    n /= 3;
    ++v;
  }
  return v;
}

void check_row_shapes(const DensityTable& t, TableReport& rep) {
  for (const auto& r : t.rows) {
    if (r.density <= 0)
      rep.failures.push_back("row " + std::to_string(r.id) +
                             ": density must be positive");
    Rat sum = 0;
    for (const auto& x : r.rel) {
      if (x < 0 || x > 1)
        rep.failures.push_back("row " + std::to_string(r.id) +
                               ": relative density outside [0,1]");
      sum += x;
    }
    if (sum != 1)
      rep.failures.push_back("row " + std::to_string(r.id) +
                             ": relative densities do not sum to 1");
  }
}

void check_disjointness(const DensityTable& t, TableReport& rep) {
  for (size_t i = 0; i < t.rows.size(); ++i)
    for (size_t j = i + 1; j < t.rows.size(); ++j) {
      const auto& x = t.rows[i];
      const auto& y = t.rows[j];
      if (val_compatible(x.vA, y.vA) && val_compatible(x.vB, y.vB) &&
          extra_compatible(x.extra, y.extra))
        rep.failures.push_back("rows " + std::to_string(x.id) + " and " +
                               std::to_string(y.id) +
                               " admit a common valuation pattern");
    }
}

void check_printed_bounds(const DensityTable& t, TableReport& rep) {
  const Rat total = row_sum(t);
  if (floor4(total) != t.printed_total)
    rep.failures.push_back("row sum does not truncate to the printed total");
  const auto cols = column_totals(t);
  for (int j = 0; j < 4; ++j)
    if (floor4(cols[j]) != t.printed_cols[j])
      rep.failures.push_back("column " + std::to_string(j + 1) +
                             " does not truncate to its printed total");
  rep.notes.push_back("mass left unclassified by the rows: " +
                      fraction_string(1 - total));
}

// Row membership at p = 2 is determined by (A, B) mod 2^9: rows without a
// disc condition constrain valuations at most 5; the v(disc) in {7..11}
// rows have (v2A, v2B) = (0, 1), where disc = -2^6(A^3 + 27 b^2) with
// b = B/2 odd, so v(disc) <= 11 is fixed by A, b mod 2^6; and the
// v(disc) in {13,14,15} rows have (v2A, v2B) = (2, 4), where
// disc = -2^12(a^3 + 27 b^2) with a = A/4, b = B/16 odd, so v(disc) <= 15
// is fixed by a, b mod 2^4. Valuations of class representatives therefore
// decide membership exactly.
void enumerate_p2(const DensityTable& t, TableReport& rep) {
  constexpr long long M = 512;
  std::vector<long long> counts(t.rows.size(), 0);
  bool overlap_reported = false;
  for (long long a = 0; a < M; ++a) {
    const long vA = a ? v2_of(a) : kBigV;
    const long long a3 = a * a * a;
    for (long long b = 0; b < M; ++b) {
      const long vB = b ? v2_of(b) : kBigV;
      const long long d16 = 16 * (4 * a3 + 27 * b * b);
      const long vD = d16 ? v2_of(d16) : kBigV;
      int matched = 0;
      for (size_t i = 0; i < t.rows.size(); ++i) {
        if (row_matches(t.rows[i], vA, vB, vD)) {
          ++counts[i];
          ++matched;
        }
      }
      if (matched > 1 && !overlap_reported) {
        rep.failures.push_back("a residue class mod 2^9 matches several rows");
        overlap_reported = true;
      }
    }
  }
  for (size_t i = 0; i < t.rows.size(); ++i)
    if (exact_rat(counts[i], M * M) != t.rows[i].density)
      rep.failures.push_back(
          "row " + std::to_string(t.rows[i].id) +
          ": enumerated density " + fraction_string(exact_rat(counts[i], M * M)) +
          " differs from " + fraction_string(t.rows[i].density));
}

// Same idea at p = 3 with modulus 3^6 for the rows whose conditions are
// bounded: plain rows constrain valuations at most 5, and the
// v(disc) in {3,4,5} rows have (v3A, v3B) = (1, 0), where
// disc factor 4A^3 + 27B^2 = 27(4a^3 + B^2) with a = A/3, so v <= 5 is
// fixed by a, B mod 3^3. Rows with unbounded conditions are skipped here
// and handled by the geometric-series check below.
void enumerate_p3(const DensityTable& t, TableReport& rep) {
  constexpr long long M = 729;
  std::vector<long long> counts(t.rows.size(), 0);
  bool overlap_reported = false;
  for (long long a = 0; a < M; ++a) {
    const long vA = a ? v3_of(a) : kBigV;
    const long long a3 = a * a * a;
    for (long long b = 0; b < M; ++b) {
      const long vB = b ? v3_of(b) : kBigV;
      const long long d = 4 * a3 + 27 * b * b;
      const long vD = d ? v3_of(d) : kBigV;
      int matched = 0;
      for (size_t i = 0; i < t.rows.size(); ++i) {
        const auto kind = t.rows[i].extra.kind;
        if (kind == ExtraCond::Kind::EvenGE || kind == ExtraCond::Kind::OddGE)
          continue;
        if (row_matches(t.rows[i], vA, vB, vD)) {
          ++counts[i];
          ++matched;
        }
      }
      if (matched > 1 && !overlap_reported) {
        rep.failures.push_back("a residue class mod 3^6 matches several rows");
        overlap_reported = true;
      }
    }
  }
  for (size_t i = 0; i < t.rows.size(); ++i) {
    const auto kind = t.rows[i].extra.kind;
    if (kind == ExtraCond::Kind::EvenGE || kind == ExtraCond::Kind::OddGE)
      continue;
    if (exact_rat(counts[i], M * M) != t.rows[i].density)
      rep.failures.push_back(
          "row " + std::to_string(t.rows[i].id) +
          ": enumerated density " + fraction_string(exact_rat(counts[i], M * M)) +
          " differs from " + fraction_string(t.rows[i].density));
  }
}

// The two unbounded rows live at (v3A, v3B) = (1, 0), where the disc
// valuation is 3 + v3(4a^3 + B^2) with a = A/3 a unit. Writing e_m for the
// absolute mass with disc valuation exactly m, direct enumeration gives
// e_6 = 4/729 and the Hensel-type ratio e_{m+1} = e_m / 3 (verified for
// m = 6, 7). Summing the geometric series with ratio 1/9:
//   mass(v even >= 6) = e_6 * 9/8,   mass(v odd >= 7) = (e_6/3) * 9/8.
void verify_geometric_p3(const DensityTable& t, TableReport& rep) {
  const DensityTableRow* even_row = nullptr;
  const DensityTableRow* odd_row = nullptr;
  for (const auto& r : t.rows) {
    if (r.extra.kind == ExtraCond::Kind::EvenGE) {
      if (even_row || !r.vA.exact || r.vA.k != 1 || !r.vB.exact ||
          r.vB.k != 0 || r.extra.v != 6) {
        rep.failures.push_back("unsupported shape for the even unbounded row");
        return;
      }
      even_row = &r;
    } else if (r.extra.kind == ExtraCond::Kind::OddGE) {
      if (odd_row || !r.vA.exact || r.vA.k != 1 || !r.vB.exact ||
          r.vB.k != 0 || r.extra.v != 7) {
        rep.failures.push_back("unsupported shape for the odd unbounded row");
        return;
      }
      odd_row = &r;
    }
  }
  if (!even_row || !odd_row) {
    rep.failures.push_back("expected one even and one odd unbounded row");
    return;
  }

  // Absolute mass of {v3(A) = 1, v3(B) = 0, v3(4a^3 + B^2) = target} from
  // unit pairs (a, B) mod K; the factor 1/3 accounts for v3(A) = 1 pinning
  // A to one class mod 3K per class of a mod K.
  const auto base_mass = [](long long K, long target) {
    long long count = 0;
    for (long long a = 1; a < K; ++a) {
      if (a % 3 == 0) continue;
      const long long a3 = a * a * a;
      for (long long b = 1; b < K; ++b) {
        if (b % 3 == 0) continue;
        long long d = 4 * a3 + b * b;
        long v = 0;
        while (v <= target && d % 3 == 0) {
          d /= 3;
          ++v;
        }
        if (v == target) ++count;
      }
    }
    return exact_rat(count, 3 * K * K);
  };

  const Rat e6 = base_mass(81, 3);    // disc valuation 6
  const Rat e7 = base_mass(243, 4);   // 7
  const Rat e8 = base_mass(729, 5);   // 8
  if (e6 != exact_rat(4, 729))
    rep.failures.push_back("base mass at disc valuation 6 is not 4/729");
  if (e7 * 3 != e6 || e8 * 9 != e6)
    rep.failures.push_back("masses at disc valuations 6,7,8 are not geometric");
  if (even_row->density != e6 * exact_rat(9, 8))
    rep.failures.push_back("even unbounded row is not 9/8 of the base mass");
  if (odd_row->density != e6 * exact_rat(3, 8))
    rep.failures.push_back("odd unbounded row is not 3/8 of the base mass");
  rep.notes.push_back("unbounded rows: base mass " + fraction_string(e6) +
                      " with verified ratio 1/3 per valuation step");
}

}  // namespace

std::pair<DensityTable, DensityTable> parse_density_tables(
    const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<DensityTable> tables;
  std::vector<bool> has_total;
  const auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("density tables line " +
                                std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "[table" && toks.size() == 2 && toks[1].back() == ']') {
      const std::string p = toks[1].substr(0, toks[1].size() - 1);
      if (p != "p=2" && p != "p=3") fail("table header must name p=2 or p=3");
      tables.push_back(DensityTable{p == "p=2" ? 2 : 3, {}, Rat(0), {}});
      has_total.push_back(false);
      continue;
    }
    if (tables.empty()) fail("content outside a table section");
    DensityTable& cur = tables.back();
    if (toks[0] == "row") {
      if (toks.size() != 9) fail("row needs 8 fields");
      DensityTableRow r;
      r.id = static_cast<int>(cur.rows.size()) + 1;
      try {
        r.vA = parse_valcond(toks[1]);
        r.vB = parse_valcond(toks[2]);
        r.extra = parse_extracond(toks[3]);
        r.density = parse_rat_or_throw(toks[4]);
        for (int j = 0; j < 4; ++j) r.rel[j] = parse_rat_or_throw(toks[5 + j]);
      } catch (const std::invalid_argument& err) {
        fail(err.what());
      }
      cur.rows.push_back(std::move(r));
    } else if (toks[0] == "total") {
      if (toks.size() != 6) fail("total needs 5 fields");
      if (has_total.back()) fail("duplicate total line");
      try {
        cur.printed_total = parse_rat_or_throw(toks[1]);
        for (int j = 0; j < 4; ++j)
          cur.printed_cols[j] = parse_rat_or_throw(toks[2 + j]);
      } catch (const std::invalid_argument& err) {
        fail(err.what());
      }
      has_total.back() = true;
    } else {
      fail("unrecognized line");
    }
  }
  if (tables.size() != 2 || tables[0].p != 2 || tables[1].p != 3)
    throw std::invalid_argument(
        "density tables: expected sections [table p=2] then [table p=3]");
  for (size_t i = 0; i < tables.size(); ++i)
    if (tables[i].rows.empty() || !has_total[i])
      throw std::invalid_argument(
          "density tables: each table needs rows and a total line");
  return {std::move(tables[0]), std::move(tables[1])};
}

std::pair<DensityTable, DensityTable> load_density_tables(
    const std::string& path) {
  return parse_density_tables(read_file(path));
}

std::optional<int> classify_row(const DensityTable& table,
                                const EllipticCurve& e) {
  const Int d = curve_disc(e);
  if (d == 0) throw std::invalid_argument("classify_row: singular model");
  const long vA = e.A == 0 ? kBigV : valuation(e.A, table.p);
  const long vB = e.B == 0 ? kBigV : valuation(e.B, table.p);
  const long vD = valuation(d, table.p);
  for (const auto& r : table.rows)
    if (row_matches(r, vA, vB, vD)) return r.id;
  return std::nullopt;
}

std::array<Rat, 4> column_totals(const DensityTable& table) {
  std::array<Rat, 4> cols{Rat(0), Rat(0), Rat(0), Rat(0)};
  for (const auto& r : table.rows)
    for (int j = 0; j < 4; ++j) cols[j] += r.density * r.rel[j];
  return cols;
}

Rat row_sum(const DensityTable& table) {
  Rat sum = 0;
  for (const auto& r : table.rows) sum += r.density;
  return sum;
}

TableReport verify_table_densities(const DensityTable& table) {
  TableReport rep;
  check_row_shapes(table, rep);
  check_disjointness(table, rep);
  if (table.p == 2) {
    enumerate_p2(table, rep);
  } else if (table.p == 3) {
    enumerate_p3(table, rep);
    verify_geometric_p3(table, rep);
  } else {
    rep.failures.push_back("only the tables at p = 2 and p = 3 are supported");
  }
  check_printed_bounds(table, rep);
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace fivesel
