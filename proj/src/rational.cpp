#include "fivesel/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fivesel {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rat> parse_rat(std::string_view s) {
  if (s.empty()) return std::nullopt;
  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
  }

  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Int d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    Rat q(Int(std::string(num), 10), d);
    q.canonicalize();
    return neg ? Rat(-q) : q;
  }

  auto dot = s.find('.');
  std::string_view whole = dot == std::string_view::npos ? s : s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (whole.empty() && frac.empty()) return std::nullopt;
  if (!whole.empty() && !all_digits(whole)) return std::nullopt;
  if (!frac.empty() && !all_digits(frac)) return std::nullopt;

  Int numer = whole.empty() ? Int(0) : Int(std::string(whole), 10);
  Int denom = 1;
  if (!frac.empty()) {
    Int scale = pow_int(10, frac.size());
    numer = numer * scale + Int(std::string(frac), 10);
    denom = scale;
  }
  Rat q(numer, denom);
  q.canonicalize();
  return neg ? Rat(-q) : q;
}

Rat parse_rat_or_throw(std::string_view s) {
  auto q = parse_rat(s);
  if (!q) throw std::invalid_argument("not a rational literal: '" + std::string(s) + "'");
  return *q;
}

std::string fraction_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_string(const Rat& q, int places) {
  if (places < 0) places = 0;
  Int scale = pow_int(10, static_cast<unsigned long>(places));
  // round(|q| * scale), half away from zero
  Int num = abs_int(q.get_num()) * scale * 2 + q.get_den();
  Int den = q.get_den() * 2;
  Int scaled = num / den;  // floor since both positive
  std::string digits = scaled.get_str();
  std::string out;
  if (q < 0 && scaled != 0) out += '-';
  if (places == 0) return out + digits;
  if (digits.size() <= static_cast<size_t>(places))
    digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
  digits.insert(digits.size() - static_cast<size_t>(places), 1, '.');
  return out + digits;
}

Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat pow_rat(const Rat& base, long exp) {
  if (exp == 0) return 1;
  bool inv = exp < 0;
  unsigned long e = inv ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  Rat r(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
  r.canonicalize();
  if (inv) {
    if (r == 0) throw std::domain_error("pow_rat: 0 to a negative power");
    r = 1 / r;
  }
  return r;
}

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Int icbrt(const Int& n) { return iroot(n, 3); }

Int iroot(const Int& n, unsigned long k) {
  if (n < 0) throw std::domain_error("iroot of negative");
  Int r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

}  // namespace fivesel
