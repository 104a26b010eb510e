#pragma once

// Period matrices on the loci, their embedded elliptic curves, and the exact
// lattice bookkeeping behind the exponent computation.
//
// A surface A_{x,y} = C^2 / Lambda where Lambda is spanned by the columns
//
//   f1 = (z1, z2), f2 = (z2, z3), mu1 = (1, 0), mu2 = (0, d)
//
// with z3 = (x+y)*z2 - x*y*z1. Lattice vectors are integer coordinates in the
// ordered basis (f1, f2, mu1, mu2).

#include <complex>
#include <utility>

#include <Eigen/Core>

#include "abelocus/humbert.hpp"

namespace abelocus {

using Complex = std::complex<double>;
using LatticeVector = Eigen::Matrix<Int, 4, 1>;
using LatticeForm = Eigen::Matrix<Int, 4, 4>;

/// Point of C^2 written as integer combinations of (z1, z2, 1) per row.
using SymbolicPoint = Eigen::Matrix<Int, 2, 3>;

/// Symmetric 2x2 matrix [[z1, z2], [z2, z3]].
class PeriodMatrix {
 public:
  PeriodMatrix(Complex z1, Complex z2, Complex z3);

  Complex z1() const { return z_(0, 0); }
  Complex z2() const { return z_(0, 1); }
  Complex z3() const { return z_(1, 1); }
  const Eigen::Matrix2cd& matrix() const { return z_; }

  Eigen::Matrix2d imag() const { return z_.imag(); }
  /// Leading minors of Im(Z): (Im z1, det Im Z).
  std::pair<double, double> imag_minors() const;
  bool in_siegel_space() const;

 private:
  Eigen::Matrix2cd z_;
};

struct EllipticEmbedding {
  Int slope{0};  // analytic representation [1 slope]
  LatticeVector v1 = LatticeVector::Zero();
  LatticeVector v2 = LatticeVector::Zero();
  Int exponent{0};  // |pairing(v1, v2)|
};

struct Embeddings {
  EllipticEmbedding ex;
  EllipticEmbedding ey;
};

/// Alternating form of the (1,d) polarisation on the lattice basis:
/// w(f1, mu1) = 1, w(f2, mu2) = d, other basis pairings zero.
LatticeForm polarisation_form(Int d);

Int pairing(const LatticeVector& v, const LatticeVector& w, Int d);

/// z3 = (x+y)*z2 - x*y*z1; throws NotInSiegelSpace with the offending minors.
PeriodMatrix build_period(Int d, const XYPair& xy, Complex z1, Complex z2);

Embeddings embeddings(Int d, const XYPair& xy);

/// Exact image of a lattice vector as a SymbolicPoint, with z3 eliminated.
SymbolicPoint expand(const LatticeVector& v, Int d, const XYPair& xy);

/// Numeric image of a lattice vector in C^2.
Eigen::Vector2cd evaluate(const LatticeVector& v, Int d, const PeriodMatrix& z);

/// Checks that the curve's period generators, pushed through [1 slope]^T,
/// are exactly the embedding's lattice vectors; then re-checks numerically at
/// the given periods within `tolerance`.
bool verify_membership(Int d, const XYPair& xy, Complex z1, Complex z2,
                       const EllipticEmbedding& emb, double tolerance = 1e-10);

/// Solves for (z1, z2) so that the two curves have periods tau_e and tau_f
/// (each over a real period d/gcd(d, slope)).
std::pair<Complex, Complex> solve_z(Int d, const XYPair& xy, Complex tau_e,
                                    Complex tau_f);

/// Inverse of solve_z on a period matrix of the family.
std::pair<Complex, Complex> curve_periods(Int d, const XYPair& xy,
                                          const PeriodMatrix& z);

LocusLabel exponent_report(Int d, const XYPair& xy);

}  // namespace abelocus
