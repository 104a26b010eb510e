#pragma once

// Singular (Humbert-type) relations
//
//   d*a1*z1 + a2*z2 + a3*z3 + a4*(z2^2 - z1*z3) + d*a5 = 0
//
// on period matrices of (1,d)-polarised surfaces. The relations produced here
// all come from a pair of integers (x, y) with d | x*y and read
// z3 = (x+y)*z2 - x*y*z1, i.e. a3 = 1 and a4 = a5 = 0.

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "abelocus/locus.hpp"

namespace abelocus {

struct XYPair {
  Int x{0};
  Int y{0};
  friend bool operator==(const XYPair&, const XYPair&) = default;
  friend auto operator<=>(const XYPair&, const XYPair&) = default;
};

struct SingularRelation {
  Int d{1};
  std::array<Int, 5> a{};  // a1..a5
  Int delta{0};            // a2^2 - 4d*a1*a3 - 4d*a4*a5
  Int p{0};                // delta == p^2

  friend bool operator==(const SingularRelation&,
                         const SingularRelation&) = default;
};

/// Builds a relation from raw coefficients, computing delta and p. Throws
/// InvalidArgument for a common divisor and OutsideFamily when delta is not
/// a perfect square.
SingularRelation make_relation(Int d, const std::array<Int, 5>& a);

/// Canonical witness for a complementary label: x = d*u/b, y = d*v/a with
/// a*u - b*v = c and the smallest admissible u.
XYPair xy_from_locus(const LocusLabel& label);

/// Exponents of the two embedded curves: m from x, n from y.
LocusLabel exponents_from_xy(Int d, const XYPair& xy);

SingularRelation relation_from_xy(Int d, const XYPair& xy);

/// Inverse of relation_from_xy, up to the choice of (x, y).
LocusLabel locus_from_relation(const SingularRelation& rel);

/// All x > y with 0 < |x|,|y| <= bound, d | xy and
/// d*(x - y) == m*gcd(d,x) == n*gcd(d,y), sorted.
std::vector<XYPair> enumerate_xy(Int d, Int m, Int n, Int bound);

bool same_locus(const SingularRelation& lhs, const SingularRelation& rhs);

/// Left-hand side of the relation at the given periods.
std::complex<double> evaluate(const SingularRelation& rel,
                              std::complex<double> z1, std::complex<double> z2,
                              std::complex<double> z3);

/// "6*z1 - 5*z2 + z3 = 0"
std::string format_relation(const SingularRelation& rel);

inline constexpr Int kMaxXYBound = 10'000'000;

}  // namespace abelocus
