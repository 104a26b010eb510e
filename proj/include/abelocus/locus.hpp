#pragma once

// Complementary exponent pairs for (1,d)-polarised abelian surfaces.

#include <utility>
#include <vector>

#include "abelocus/arith.hpp"

namespace abelocus {

/// Names the locus of surfaces of type (1,d) carrying complementary elliptic
/// curves of exponents m and n.
struct LocusLabel {
  Int d{1};
  Int m{1};
  Int n{1};

  friend bool operator==(const LocusLabel&, const LocusLabel&) = default;

  /// Same locus up to swapping the two curves.
  bool same_pair(const LocusLabel& o) const {
    return d == o.d && ((m == o.m && n == o.n) || (m == o.n && n == o.m));
  }
};

/// m = c*d/a, n = c*d/b with a, b | d and a, b, c pairwise coprime.
struct Decomposition {
  Int a{1};
  Int b{1};
  Int c{1};
  Int g{1};  // gcd(m, n) == c*d/(a*b)

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct ProductType {
  std::pair<Int, Int> type;       // (gcd(a,b), lcm(a,b))
  std::pair<Int, Int> exponents;  // primitive exponents of the two factors
};

/// m*n*gcd(m,n,d) == gcd(m,n)^2 * d.
bool is_complementary(Int d, Int m, Int n);
inline bool is_complementary(const LocusLabel& l) {
  return is_complementary(l.d, l.m, l.n);
}

/// Throws NotComplementary when the label fails the exponent equation.
Decomposition decompose(const LocusLabel& label);

/// Every m complementary to n for type (1,d), sorted, built prime by prime.
std::vector<Int> complements(Int d, Int n);

/// Same set, built from the divisors q of d (a | q, with a, q/a, c pairwise
/// coprime and m = c*d/(q/a)).
std::vector<Int> complements_via_q(Int d, Int n);

/// Number of irreducible components of the locus of (1,d) surfaces
/// containing a curve of exponent n.
Int component_count(Int d, Int n);

ProductType product_type(Int a, Int b);

}  // namespace abelocus
