#include "abelocus/periods.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include <Eigen/LU>

namespace abelocus {

namespace {

void require_pair(Int d, const XYPair& xy, const char* what) {
  detail::require_positive(d, what);
  if (xy.x == 0 || xy.y == 0)
    fail(ErrorKind::InvalidArgument, std::string(what) + ": zero slope");
  if (xy.x == xy.y) fail(ErrorKind::Degenerate, std::string(what) + ": x == y");
  if ((static_cast<__int128>(xy.x) * xy.y) % d != 0)
    fail(ErrorKind::InvalidArgument,
         std::string(what) + ": d does not divide x*y");
}

// Real period of the curve with the given slope, signed like the slope.
Int real_period(Int d, Int slope) {
  const Int mag = std::abs(slope);
  return d / std::gcd(d, mag) * (slope < 0 ? -1 : 1);
}

EllipticEmbedding make_embedding(Int d, Int slope, Int other) {
  const Int lcm = std::lcm(d, std::abs(slope));
  EllipticEmbedding emb;
  emb.slope = slope;
  emb.v1 << -other, 1, 0, 0;
  emb.v2 << 0, 0, lcm / slope, lcm / d;
  ABELOCUS_ASSERT(std::gcd(lcm / slope, lcm / d) == 1);
  emb.exponent = std::abs(pairing(emb.v1, emb.v2, d));
  return emb;
}

// Columns f1, f2, mu1, mu2 flattened row-wise into (z1, z2, 1) coefficients.
Eigen::Matrix<Int, 6, 4> symbolic_columns(Int d, const XYPair& xy) {
  Eigen::Matrix<Int, 6, 4> cols = Eigen::Matrix<Int, 6, 4>::Zero();
  cols(0, 0) = 1;                 // f1, first row: z1
  cols(4, 0) = 1;                 // f1, second row: z2
  cols(1, 1) = 1;                 // f2, first row: z2
  cols(3, 1) = -xy.x * xy.y;      // f2, second row: z3
  cols(4, 1) = xy.x + xy.y;
  cols(2, 2) = 1;                 // mu1
  cols(5, 3) = d;                 // mu2
  return cols;
}

SymbolicPoint on_line(const Eigen::Matrix<Int, 1, 3>& t, Int slope) {
  SymbolicPoint p;
  p.row(0) = t;
  p.row(1) = slope * t;
  return p;
}

Complex value(const Eigen::Matrix<Int, 1, 3>& t, Complex z1, Complex z2) {
  return static_cast<double>(t(0)) * z1 + static_cast<double>(t(1)) * z2 +
         static_cast<double>(t(2));
}

}  // namespace

PeriodMatrix::PeriodMatrix(Complex z1, Complex z2, Complex z3) {
  z_ << z1, z2, z2, z3;
}

std::pair<double, double> PeriodMatrix::imag_minors() const {
  const Eigen::Matrix2d im = imag();
  return {im(0, 0), im.determinant()};
}

bool PeriodMatrix::in_siegel_space() const {
  const auto [m1, m2] = imag_minors();
  return m1 > 0 && m2 > 0;
}

LatticeForm polarisation_form(Int d) {
  LatticeForm j = LatticeForm::Zero();
  j(0, 2) = 1;
  j(2, 0) = -1;
  j(1, 3) = d;
  j(3, 1) = -d;
  return j;
}

Int pairing(const LatticeVector& v, const LatticeVector& w, Int d) {
  return v.dot(polarisation_form(d) * w);
}

PeriodMatrix build_period(Int d, const XYPair& xy, Complex z1, Complex z2) {
  detail::require_positive(d, "build_period");
  if ((static_cast<__int128>(xy.x) * xy.y) % d != 0)
    fail(ErrorKind::InvalidArgument, "build_period: d does not divide x*y");
  const double s = static_cast<double>(xy.x + xy.y);
  const double p = static_cast<double>(xy.x) * static_cast<double>(xy.y);
  PeriodMatrix z(z1, z2, s * z2 - p * z1);
  if (!z.in_siegel_space()) {
    const auto [m1, m2] = z.imag_minors();
    std::ostringstream os;
    os.precision(17);
    os << "build_period: Im(Z) is not positive definite (Im z1 = " << m1
       << ", det Im Z = " << m2 << ")";
    fail(ErrorKind::NotInSiegelSpace, os.str());
  }
  return z;
}

Embeddings embeddings(Int d, const XYPair& xy) {
  require_pair(d, xy, "embeddings");
  return {make_embedding(d, xy.x, xy.y), make_embedding(d, xy.y, xy.x)};
}

SymbolicPoint expand(const LatticeVector& v, Int d, const XYPair& xy) {
  const Eigen::Matrix<Int, 6, 1> flat = symbolic_columns(d, xy) * v;
  SymbolicPoint p;
  p.row(0) = flat.head<3>().transpose();
  p.row(1) = flat.tail<3>().transpose();
  return p;
}

Eigen::Vector2cd evaluate(const LatticeVector& v, Int d, const PeriodMatrix& z) {
  Eigen::Matrix<Complex, 2, 4> cols;
  cols << z.z1(), z.z2(), 1.0, 0.0,
          z.z2(), z.z3(), 0.0, static_cast<double>(d);
  return cols * v.cast<Complex>();
}

bool verify_membership(Int d, const XYPair& xy, Complex z1, Complex z2,
                       const EllipticEmbedding& emb, double tolerance) {
  require_pair(d, xy, "verify_membership");
  Int other;
  if (emb.slope == xy.x)
    other = xy.y;
  else if (emb.slope == xy.y)
    other = xy.x;
  else
    return false;

  // Curve periods: z2 - other*z1 and the real period lcm(d, slope)/slope.
  Eigen::Matrix<Int, 1, 3> t1, t2;
  t1 << -other, 1, 0;
  t2 << 0, 0, std::lcm(d, std::abs(emb.slope)) / emb.slope;

  if (expand(emb.v1, d, xy) != on_line(t1, emb.slope)) return false;
  if (expand(emb.v2, d, xy) != on_line(t2, emb.slope)) return false;

  const PeriodMatrix z = build_period(d, xy, z1, z2);
  const double slope = static_cast<double>(emb.slope);
  for (const auto& [v, t] : {std::pair{emb.v1, t1}, std::pair{emb.v2, t2}}) {
    const Complex period = value(t, z1, z2);
    const Eigen::Vector2cd want(period, slope * period);
    const Eigen::Vector2cd got = evaluate(v, d, z);
    const double scale = std::max(1.0, want.norm());
    if ((got - want).norm() > tolerance * scale) return false;
  }
  return true;
}

std::pair<Complex, Complex> solve_z(Int d, const XYPair& xy, Complex tau_e,
                                    Complex tau_f) {
  require_pair(d, xy, "solve_z");
  if (xy.x <= xy.y)
    fail(ErrorKind::InvalidArgument, "solve_z: expected x > y");
  if (!(tau_e.imag() > 0) || !(tau_f.imag() > 0))
    fail(ErrorKind::InvalidArgument,
         "solve_z: curve periods must lie in the upper half-plane");
  const double cx = static_cast<double>(std::abs(real_period(d, xy.x)));
  const double cy = static_cast<double>(std::abs(real_period(d, xy.y)));
  // z2 - y*z1 = cx*tau_e and x*z1 - z2 = cy*tau_f.
  const Complex z1 =
      (cx * tau_e + cy * tau_f) / static_cast<double>(xy.x - xy.y);
  const Complex z2 = static_cast<double>(xy.y) * z1 + cx * tau_e;
  return {z1, z2};
}

std::pair<Complex, Complex> curve_periods(Int d, const XYPair& xy,
                                          const PeriodMatrix& z) {
  require_pair(d, xy, "curve_periods");
  const double cx = static_cast<double>(std::abs(real_period(d, xy.x)));
  const double cy = static_cast<double>(std::abs(real_period(d, xy.y)));
  const double x = static_cast<double>(xy.x);
  const double y = static_cast<double>(xy.y);
  return {(z.z2() - y * z.z1()) / cx, (x * z.z1() - z.z2()) / cy};
}

LocusLabel exponent_report(Int d, const XYPair& xy) {
  const Embeddings e = embeddings(d, xy);
  const LocusLabel label{d, e.ex.exponent, e.ey.exponent};
  ABELOCUS_ASSERT(label == exponents_from_xy(d, xy));
  return label;
}

}  // namespace abelocus
