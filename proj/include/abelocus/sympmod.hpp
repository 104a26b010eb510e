#pragma once

// Finite symplectic modules Z_N^4 = E (+) F with the form w_E + w_F, and
// exhaustive checks of the structural facts about their subgroups that the
// classification of the loci rests on.
//
// Coordinates are ordered (e1, e2, f1, f2). Elements are addressed by their
// base-N index ((e1*N + e2)*N + f1)*N + f2, and subgroups are stored as the
// sorted list of element indices, which makes equality and hashing canonical.

#include <cstdint>
#include <set>
#include <vector>

#include <Eigen/Core>

#include "abelocus/arith.hpp"

namespace abelocus {

/// Hard cap on modulus^4 for anything that materialises the module.
inline constexpr Int kEnumerationBound = 2'000'000;

using Coords4 = Eigen::Matrix<Int, 4, 1>;
using Mat2 = Eigen::Matrix<Int, 2, 2>;
using Mat4 = Eigen::Matrix<Int, 4, 4>;
using Index = std::uint32_t;

class ModVector {
 public:
  ModVector(Int modulus, const Coords4& coords);
  ModVector(Int modulus, Int e1, Int e2, Int f1, Int f2)
      : ModVector(modulus, Coords4(e1, e2, f1, f2)) {}

  Int modulus() const { return modulus_; }
  const Coords4& coords() const { return coords_; }
  Int operator[](int i) const { return coords_(i); }
  bool is_zero() const { return coords_.isZero(); }

  ModVector operator+(const ModVector& o) const;
  ModVector operator-() const;
  ModVector operator*(Int k) const;

  friend bool operator==(const ModVector& l, const ModVector& r) {
    return l.modulus_ == r.modulus_ && l.coords_ == r.coords_;
  }

 private:
  Int modulus_;
  Coords4 coords_;
};

inline ModVector operator*(Int k, const ModVector& v) { return v * k; }

/// Least k >= 1 with k*v == 0.
Int element_order(const ModVector& v);

/// The standard form: w(e1,e2) = w(f1,f2) = 1, cross pairings zero.
struct SymplecticForm {
  Int modulus;
  Mat4 gram;

  static SymplecticForm standard(Int modulus);
  Int operator()(const ModVector& x, const ModVector& y) const;
};

class SymplecticModule;

class Subgroup {
 public:
  Int modulus() const { return modulus_; }
  const std::vector<ModVector>& generators() const { return generators_; }
  const std::vector<Index>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Index i) const;
  bool contains(const ModVector& v) const;
  std::size_t intersection_size(const Subgroup& o) const;

  friend bool operator==(const Subgroup& l, const Subgroup& r) {
    return l.modulus_ == r.modulus_ && l.elements_ == r.elements_;
  }

 private:
  friend class SymplecticModule;
  Int modulus_{1};
  std::vector<ModVector> generators_;
  std::vector<Index> elements_;
};

class SymplecticModule {
 public:
  /// Throws BoundExceeded when modulus^4 exceeds kEnumerationBound.
  explicit SymplecticModule(Int modulus);

  Int modulus() const { return n_; }
  Index size() const { return size_; }
  const SymplecticForm& form() const { return form_; }

  Index index(const ModVector& v) const;
  ModVector vector(Index i) const;
  Index add(Index i, Index j) const;
  Index scale(Int k, Index i) const;
  Int order(Index i) const;
  bool in_E(Index i) const;  // f-part zero
  bool in_F(Index i) const;  // e-part zero

  Subgroup span(const std::vector<ModVector>& generators) const;
  Subgroup cyclic(const ModVector& generator) const;
  Subgroup E() const;
  Subgroup F() const;
  /// {k*v : v in the whole module}.
  Subgroup multiples(Int k) const;

  Index act(const Mat4& g, Index i) const;
  Subgroup act(const Mat4& g, const Subgroup& s) const;

  std::size_t count_in_E(const Subgroup& s) const;
  std::size_t count_in_F(const Subgroup& s) const;

 private:
  Subgroup from_elements(std::vector<ModVector> gens,
                         std::vector<Index> elems) const;

  Int n_;
  Index size_;
  SymplecticForm form_;
};

/// y of order N with (N/k)*y == x, found by scanning the module.
ModVector divide_by_cofactor(const ModVector& x, Int k);

/// {x in sub : k*x == 0} == (N/k)*sub.
bool torsion_check(const Subgroup& sub, Int k);

/// <b*e1 + a*f1>, cyclic of order N with |G n E| = a and |G n F| = b.
Subgroup standard_G(Int modulus, Int a, Int b);

struct IsotropicData {
  Int c{1};
  Int d{1};
  Int l{1};        // gcd(c, d)
  Int c_tilde{1};  // c / l
  Subgroup K;      // inside Z_{cd}^4
};

/// Checks that `K` (inside Z_{cd}^4) is isomorphic to Z_c^2, meets E and F
/// trivially, and is isotropic for w_K(dP, dQ) = w(P, Q) mod c.
bool is_allowable(const Subgroup& K, Int c, Int d);

/// K = <d*b*e1 + d*a*f1, d*a*e2 - d*b*f2> in Z_{cd}^4.
IsotropicData standard_K(Int a, Int b, Int c, Int d);

/// Blockwise action of SL2 x SL2: diag(A, B).
Mat4 block_action(const Mat2& a, const Mat2& b);

/// Elementary generators S and T of SL2(Z_N) on each factor.
std::vector<Mat4> symplectic_generators(Int modulus);

std::vector<Mat2> sl2_elements(Int modulus);
/// N^3 * prod_{p | N} (1 - p^-2).
Int sl2_order(Int modulus);

/// Breadth-first orbit of a subgroup tuple under the given generators.
std::set<std::vector<Index>> orbit(const SymplecticModule& module,
                                   const std::vector<Subgroup>& start,
                                   const std::vector<Mat4>& generators);

struct TransitivityReport {
  std::size_t count{0};       // cyclic G of order N with |GnE|=a, |GnF|=b
  std::size_t orbit_size{0};  // orbit of standard_G
  bool single_orbit{false};
};

TransitivityReport verify_transitive_G(Int modulus, Int a, Int b);

struct AllowableReport {
  std::size_t count{0};  // allowable K inside Z_{cd}^4
  std::size_t orbit_size{0};
  bool single_orbit{false};
};

/// Every allowable K is the standard one in some symplectic basis.
AllowableReport verify_allowable_K(Int a, Int b, Int c, Int d);

/// (E (+) F)/K with the projection and the images of E and F.
class QuotientGroup {
 public:
  QuotientGroup(const SymplecticModule& module, const Subgroup& K);

  const SymplecticModule& module() const { return *module_; }
  std::size_t order() const { return reps_.size(); }
  Index project(Index i) const { return coset_[i]; }
  Index representative(Index coset) const { return reps_[coset]; }
  Index add(Index p, Index q) const;
  Index scale(Int k, Index p) const;
  Int order_of(Index p) const;

  /// Sorted coset ids of the image of a set of module elements.
  std::vector<Index> image(const std::vector<Index>& elements) const;
  /// Sorted module elements mapping into the given cosets.
  std::vector<Index> preimage(const std::vector<Index>& cosets) const;
  /// Sorted coset ids of the cyclic subgroup generated by p.
  std::vector<Index> cyclic(Index p) const;

  const std::vector<Index>& e_image() const { return e_image_; }
  const std::vector<Index>& f_image() const { return f_image_; }

 private:
  const SymplecticModule* module_;
  std::vector<Index> coset_;
  std::vector<Index> reps_;
  std::vector<Index> e_image_;
  std::vector<Index> f_image_;
};

struct IntersectionReport {
  std::size_t quotient_order{0};
  bool meet_is_image_of_dE{false};    // E' n F' == pi(dE)
  bool meet_is_image_of_dF{false};    // E' n F' == pi(dF)
  bool preimage_is_dE_plus_dF{false};  // pi^-1(E' n F') == dE + dF
  bool holds() const {
    return meet_is_image_of_dE && meet_is_image_of_dF && preimage_is_dE_plus_dF;
  }
};

IntersectionReport check_intersection_lemma(const IsotropicData& data);

struct DominationReport {
  std::size_t lifts{0};    // cyclic subgroups of L of order l*d
  std::size_t targets{0};  // cyclic G' in X[d] of order d, G' n E' n F' = 0
  bool images_valid{false};
  bool surjective{false};
  bool holds() const { return images_valid && surjective; }
};

DominationReport verify_domination(Int c, Int d, Int a, Int b);

struct PairReport {
  std::size_t pair_count{0};
  std::size_t orbit_size{0};
  bool standard_admissible{false};  // the standard pair meets the conditions
  bool single_orbit{false};
};

/// Enumerates all (K, G) with K allowable, |G| = l*d, |G n K| = l,
/// G n (dE + dF) inside K, |G n E| = a and |G n F| = b, and compares them
/// with the orbit of (standard_K, <c~*b*e1 + c~*a*f1>).
PairReport verify_technical1(Int a, Int b, Int c, Int d);

}  // namespace abelocus
