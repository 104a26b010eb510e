#include "abelocus/humbert.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace abelocus {

namespace {

Int narrow(__int128 v, const char* what) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    fail(ErrorKind::UnsupportedMagnitude,
         std::string(what) + ": value exceeds 64-bit range");
  return static_cast<Int>(v);
}

Int gcd_with(Int d, Int v) { return std::gcd(d, v < 0 ? -v : v); }

void require_xy(Int d, const XYPair& xy, const char* what) {
  detail::require_positive(d, what);
  if (xy.x == 0 || xy.y == 0)
    fail(ErrorKind::InvalidArgument, std::string(what) + ": x and y must be nonzero");
  if (xy.x == xy.y)
    fail(ErrorKind::Degenerate, std::string(what) + ": x == y");
  if ((static_cast<__int128>(xy.x) * xy.y) % d != 0)
    fail(ErrorKind::InvalidArgument,
         std::string(what) + ": d = " + std::to_string(d) +
             " does not divide x*y = " + std::to_string(xy.x) + "*" +
             std::to_string(xy.y));
}

}  // namespace

SingularRelation make_relation(Int d, const std::array<Int, 5>& a) {
  detail::require_positive(d, "make_relation");
  Int g = 0;
  for (Int ai : a) g = std::gcd(g, ai < 0 ? -ai : ai);
  if (g != 1)
    fail(ErrorKind::InvalidArgument,
         "make_relation: coefficients must have no common divisor");
  const __int128 delta = static_cast<__int128>(a[1]) * a[1] -
                         static_cast<__int128>(4) * d * a[0] * a[2] -
                         static_cast<__int128>(4) * d * a[3] * a[4];
  if (!is_perfect_square(delta))
    fail(ErrorKind::OutsideFamily,
         "make_relation: discriminant " + std::to_string(narrow(delta, "delta")) +
             " is not a perfect square");
  return {d, a, narrow(delta, "delta"), narrow(isqrt(delta), "p")};
}

XYPair xy_from_locus(const LocusLabel& label) {
  const Decomposition dec = decompose(label);
  auto [a, b, c, u, v] = solve_au_bv(dec.a, dec.b, dec.c);
  // v == 0 would put a zero slope into the lattice; the next witness in the
  // family (u + b, v + a) keeps the same residue class.
  if (v == 0) {
    u += b;
    v += a;
  }
  const Int d = label.d;
  const XYPair xy{narrow(static_cast<__int128>(d / b) * u, "xy_from_locus"),
                  narrow(static_cast<__int128>(d / a) * v, "xy_from_locus")};
  ABELOCUS_ASSERT(xy.x > xy.y && xy.y != 0);
  ABELOCUS_ASSERT((static_cast<__int128>(xy.x) * xy.y) % d == 0);
  ABELOCUS_ASSERT(gcd_with(d, xy.x) == d / b && gcd_with(d, xy.y) == d / a);
  return xy;
}

LocusLabel exponents_from_xy(Int d, const XYPair& xy) {
  require_xy(d, xy, "exponents_from_xy");
  const __int128 span =
      static_cast<__int128>(d) * std::abs(static_cast<__int128>(xy.x) - xy.y);
  return {d, narrow(span / gcd_with(d, xy.x), "exponents_from_xy"),
          narrow(span / gcd_with(d, xy.y), "exponents_from_xy")};
}

SingularRelation relation_from_xy(Int d, const XYPair& xy) {
  require_xy(d, xy, "relation_from_xy");
  const __int128 prod = static_cast<__int128>(xy.x) * xy.y;
  const __int128 diff = static_cast<__int128>(xy.x) - xy.y;
  SingularRelation rel;
  rel.d = d;
  rel.a = {narrow(prod / d, "relation_from_xy"),
           narrow(-(static_cast<__int128>(xy.x) + xy.y), "relation_from_xy"), 1,
           0, 0};
  rel.delta = narrow(diff * diff, "relation_from_xy");
  rel.p = narrow(diff < 0 ? -diff : diff, "relation_from_xy");
  return rel;
}

LocusLabel locus_from_relation(const SingularRelation& rel) {
  const auto& a = rel.a;
  if (a[2] != 1 || a[3] != 0 || a[4] != 0)
    fail(ErrorKind::OutsideFamily,
         "locus_from_relation: only relations with a3 = 1 and a4 = a5 = 0 "
         "are supported");
  // x + y = -a2, x*y = d*a1.
  const __int128 sum = -static_cast<__int128>(a[1]);
  const __int128 prod = static_cast<__int128>(rel.d) * a[0];
  const __int128 disc = sum * sum - 4 * prod;
  if (!is_perfect_square(disc))
    fail(ErrorKind::OutsideFamily,
         "locus_from_relation: the quadratic has no integer roots");
  const __int128 root = isqrt(disc);
  if (root == 0) fail(ErrorKind::Degenerate, "locus_from_relation: x == y");
  const XYPair xy{narrow((sum + root) / 2, "locus_from_relation"),
                  narrow((sum - root) / 2, "locus_from_relation")};
  if (xy.x == 0 || xy.y == 0)
    fail(ErrorKind::OutsideFamily,
         "locus_from_relation: a zero root does not define an embedded curve");
  return exponents_from_xy(rel.d, xy);
}

std::vector<XYPair> enumerate_xy(Int d, Int m, Int n, Int bound) {
  detail::require_positive(bound, "enumerate_xy");
  if (bound > kMaxXYBound)
    fail(ErrorKind::BoundExceeded,
         "enumerate_xy: bound exceeds " + std::to_string(kMaxXYBound));
  if (!is_complementary(d, m, n))
    fail(ErrorKind::NotComplementary, "enumerate_xy: exponents are not complementary");
  // For fixed x the first equation pins x - y.
  std::vector<XYPair> out;
  for (Int x = -bound; x <= bound; ++x) {
    if (x == 0) continue;
    const __int128 lhs = static_cast<__int128>(m) * gcd_with(d, x);
    if (lhs % d != 0) continue;
    const __int128 diff = lhs / d;
    const __int128 y = x - diff;
    if (y == 0 || y < -bound) continue;
    if ((static_cast<__int128>(x) * y) % d != 0) continue;
    if (static_cast<__int128>(n) * gcd_with(d, static_cast<Int>(y)) != d * diff)
      continue;
    out.push_back({x, static_cast<Int>(y)});
  }
  return out;
}

bool same_locus(const SingularRelation& lhs, const SingularRelation& rhs) {
  if (lhs.d != rhs.d)
    fail(ErrorKind::InvalidArgument, "same_locus: relations have different d");
  return locus_from_relation(lhs).same_pair(locus_from_relation(rhs));
}

std::complex<double> evaluate(const SingularRelation& rel,
                              std::complex<double> z1, std::complex<double> z2,
                              std::complex<double> z3) {
  const auto& a = rel.a;
  const double d = static_cast<double>(rel.d);
  return d * static_cast<double>(a[0]) * z1 + static_cast<double>(a[1]) * z2 +
         static_cast<double>(a[2]) * z3 +
         static_cast<double>(a[3]) * (z2 * z2 - z1 * z3) +
         d * static_cast<double>(a[4]);
}

std::string format_relation(const SingularRelation& rel) {
  const auto& a = rel.a;
  const __int128 coeffs[5] = {static_cast<__int128>(rel.d) * a[0], a[1], a[2],
                              a[3], static_cast<__int128>(rel.d) * a[4]};
  static constexpr const char* kTerms[5] = {"z1", "z2", "z3", "(z2^2 - z1*z3)",
                                            ""};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 5; ++i) {
    const Int c = narrow(coeffs[i], "format_relation");
    if (c == 0) continue;
    const Int mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (i == 4)
      os << mag;
    else if (mag == 1)
      os << kTerms[i];
    else
      os << mag << '*' << kTerms[i];
    first = false;
  }
  if (first) os << '0';
  os << " = 0";
  return os.str();
}

}  // namespace abelocus
