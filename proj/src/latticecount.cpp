#include "fivesel/latticecount.hpp"

#include <cmath>
#include <stdexcept>

namespace fivesel {

namespace {

void require_height(const Int& X) {
  if (X < 1) throw std::invalid_argument("height bound must be at least 1");
}

// Largest I with I^3 < X (X >= 1).
Int max_i(const Int& X) { return icbrt(X - 1); }

// Largest |J| with J^2 < 4X.
Int max_j(const Int& X) { return isqrt(4 * X - 1); }

}  // namespace

Int count_ij(const Int& X, DiscSign sign) {
  require_height(X);
  const Int imax = max_i(X);
  const Int jmax = max_j(X);
  Int n = 0;
  switch (sign) {
    case DiscSign::Positive:
      // Needs I >= 1; then J^2 < 4I^3 (and 4I^3 <= 4(X-1) < 4X keeps the
      // height constraint slack).
      for (Int I = 1; I <= imax; ++I)
        n += 2 * isqrt(4 * I * I * I - 1) + 1;
      return n;
    case DiscSign::Negative:
      // I <= -1: every J in the box qualifies.
      n += imax * (2 * jmax + 1);
      // I = 0: every J except 0.
      n += 2 * jmax;
      // I >= 1: J^2 > 4I^3, i.e. |J| >= isqrt(4I^3) + 1, up to jmax.
      for (Int I = 1; I <= imax; ++I)
        n += 2 * (jmax - isqrt(4 * I * I * I));
      return n;
    case DiscSign::Zero:
      // 4I^3 = J^2 forces I = k^2, J = +-2k^3; height is then k^6.
      return 1 + 2 * iroot(X - 1, 6);
  }
  throw std::logic_error("unreachable");
}

IJCounts count_ij_total(const Int& X) {
  return IJCounts{count_ij(X, DiscSign::Positive),
                  count_ij(X, DiscSign::Negative),
                  count_ij(X, DiscSign::Zero)};
}

Int count_ij_box(const Int& X) {
  require_height(X);
  return (2 * max_i(X) + 1) * (2 * max_j(X) + 1);
}

Int count_ij_brute(const Int& X, DiscSign sign) {
  require_height(X);
  const Int imax = max_i(X);
  const Int jmax = max_j(X);
  Int n = 0;
  for (Int I = -imax; I <= imax; ++I)
    for (Int J = -jmax; J <= jmax; ++J) {
      const Int d = 4 * I * I * I - J * J;
      const bool match = (sign == DiscSign::Positive && d > 0) ||
                         (sign == DiscSign::Negative && d < 0) ||
                         (sign == DiscSign::Zero && d == 0);
      if (match) ++n;
    }
  return n;
}

EnvelopeReport check_envelope(const Int& X, DiscSign sign) {
  require_height(X);
  if (sign == DiscSign::Zero)
    throw std::invalid_argument("envelope applies to nonzero signs only");
  const long c8 = sign == DiscSign::Positive ? 8 : 32;
  EnvelopeReport rep;
  rep.X = X;
  rep.count = count_ij(X, sign);
  rep.r = iroot(pow_int(X, 5), 6);
  rep.s = isqrt(X);
  rep.upper_ok = 5 * rep.count <= c8 * rep.r + 25 * rep.s;
  rep.lower_ok = c8 * (rep.r + 1) <= 5 * rep.count + 25 * rep.s;
  return rep;
}

double fitted_exponent(DiscSign sign) {
  if (sign == DiscSign::Zero)
    throw std::invalid_argument("exponent fit applies to nonzero signs only");
  std::vector<long double> lx, ly;
  for (unsigned long k = 4; k <= 12; ++k) {
    const Int X = pow_int(10, k);
    const Int n = count_ij(X, sign);
    lx.push_back(static_cast<long double>(k) * std::log(10.0L));
    ly.push_back(std::log(static_cast<long double>(n.get_d())));
  }
  long double mx = 0, my = 0;
  for (size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<long double>(lx.size());
  my /= static_cast<long double>(ly.size());
  long double num = 0, den = 0;
  for (size_t i = 0; i < lx.size(); ++i) {
    num += (lx[i] - mx) * (ly[i] - my);
    den += (lx[i] - mx) * (lx[i] - mx);
  }
  return static_cast<double>(num / den);
}

namespace {

// Rational pi accurate to well under 1e-12; the Disk volume error it
// introduces is absorbed by the ratio ceiling.
const Rat& rational_pi() {
  static const Rat pi = parse_rat_or_throw("3.14159265358979323846");
  return pi;
}

Int disk_count(long t) {
  const Int t2 = Int(t) * t;
  Int n = 0;
  for (long x = -t; x <= t; ++x)
    n += 2 * isqrt(t2 - Int(x) * x) + 1;
  return n;
}

}  // namespace

DavenportRow davenport_demo(RegionKind kind, long t) {
  if (t < 1) throw std::invalid_argument("scale factor must be at least 1");
  DavenportRow row;
  row.t = t;
  const Int ti(t);
  switch (kind) {
    case RegionKind::Cube:
      row.count = (ti + 1) * (ti + 1) * (ti + 1);
      row.volume = Rat(ti * ti * ti);
      row.projection = Rat(ti * ti);  // square faces
      break;
    case RegionKind::Disk:
      row.count = disk_count(t);
      row.volume = rational_pi() * Rat(ti * ti);
      row.projection = Rat(2 * ti);  // axis segment [-t, t]
      break;
    case RegionKind::Simplex:
      row.count = (ti + 1) * (ti + 2) / 2;  // exact: the product is even
      row.volume = Rat(ti * ti) / 2;
      row.projection = Rat(ti);  // legs [0, t]
      break;
  }
  row.diff = abs_rat(Rat(row.count) - row.volume);
  const Rat denom = row.projection > 1 ? row.projection : Rat(1);
  row.ratio = row.diff / denom;
  return row;
}

DavenportReport davenport_grid(RegionKind kind) {
  DavenportReport rep;
  rep.kind = kind;
  rep.bound = kind == RegionKind::Cube ? Rat(4) : Rat(2);
  rep.ok = true;
  for (long t : {10L, 20L, 40L, 80L, 160L}) {
    rep.rows.push_back(davenport_demo(kind, t));
    if (rep.rows.back().ratio > rep.bound) rep.ok = false;
  }
  return rep;
}

}  // namespace fivesel
