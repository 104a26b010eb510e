#include <doctest.h>

#include <random>

#include "abelocus/error.hpp"
#include "abelocus/locus.hpp"
#include "abelocus/periods.hpp"
#include "oracles.hpp"

using namespace abelocus;
using namespace std::complex_literals;

namespace {

LatticeVector vec(Int a, Int b, Int c, Int d) { return LatticeVector(a, b, c, d); }

}  // namespace

TEST_CASE("build_period") {
  const PeriodMatrix z = build_period(6, {3, 2}, 1i, 2.5i);
  CHECK(std::abs(z.z3() - 6.5i) < 1e-12);
  CHECK(z.imag_minors().second == doctest::Approx(0.25));
  try {
    build_period(6, {3, 2}, 1i, 1i);
    FAIL("expected not-in-siegel-space");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInSiegelSpace);
    CHECK(std::string(e.what()).find("det Im Z") != std::string::npos);
  }

  const Complex z1(0.2, 0.05), z2(0.1, 2.2);
  const PeriodMatrix w = build_period(90, {45, 36}, z1, z2);
  CHECK(std::abs(1620.0 * w.z1() - 81.0 * w.z2() + w.z3()) < 1e-9);
  CHECK(std::abs(evaluate(relation_from_xy(90, {45, 36}), w.z1(), w.z2(), w.z3())) < 1e-9);
}

TEST_CASE("embeddings") {
  auto e = embeddings(6, {3, 2});
  CHECK(e.ex.v1 == vec(-2, 1, 0, 0));
  CHECK(e.ex.v2 == vec(0, 0, 2, 1));
  CHECK(e.ex.exponent == 2);
  CHECK(e.ey.v1 == vec(-3, 1, 0, 0));
  CHECK(e.ey.v2 == vec(0, 0, 3, 1));
  CHECK(e.ey.exponent == 3);
  e = embeddings(90, {45, 36});
  CHECK(e.ex.exponent == 18);
  CHECK(e.ey.exponent == 45);
  CHECK_THROWS_AS(embeddings(6, {3, 0}), Error);
}

TEST_CASE("pairing") {
  CHECK(pairing(vec(1, 0, 0, 0), vec(0, 0, 1, 0), 7) == 1);
  CHECK(pairing(vec(0, 1, 0, 0), vec(0, 0, 0, 1), 6) == 6);
  CHECK(pairing(vec(-2, 1, 0, 0), vec(0, 0, 2, 1), 6) == 2);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Int> pick(-50, 50);
  for (int i = 0; i < 2000; ++i) {
    const Int d = 1 + (pick(rng) + 50) % 20;
    const LatticeVector u(pick(rng), pick(rng), pick(rng), pick(rng));
    const LatticeVector v(pick(rng), pick(rng), pick(rng), pick(rng));
    const LatticeVector w(pick(rng), pick(rng), pick(rng), pick(rng));
    const Int k = pick(rng);
    REQUIRE(pairing(u, u, d) == 0);
    REQUIRE(pairing(u, v, d) == -pairing(v, u, d));
    REQUIRE(pairing(u + k * w, v, d) == pairing(u, v, d) + k * pairing(w, v, d));
    // Explicit expansion over the basis.
    REQUIRE(pairing(u, v, d) ==
            u(0) * v(2) - u(2) * v(0) + d * (u(1) * v(3) - u(3) * v(1)));
  }
}

TEST_CASE("verify_membership") {
  const auto e = embeddings(6, {3, 2});
  const Complex z1 = 1i, z2 = 2.5i;
  CHECK(verify_membership(6, {3, 2}, z1, z2, e.ey));
  CHECK(verify_membership(6, {3, 2}, z1, z2, e.ex));
  auto wrong = e.ex;
  wrong.v1 = vec(-1, 1, 0, 0);
  CHECK_FALSE(verify_membership(6, {3, 2}, z1, z2, wrong));
  wrong = e.ex;
  wrong.slope = 5;
  CHECK_FALSE(verify_membership(6, {3, 2}, z1, z2, wrong));
}

TEST_CASE("expand is exact") {
  // f2 - 3 f1 maps to [1, 2]^T (z2 - 3 z1).
  const SymbolicPoint p = expand(vec(-3, 1, 0, 0), 6, {3, 2});
  SymbolicPoint want;
  want << -3, 1, 0, -6, 2, 0;
  CHECK(p == want);
}

TEST_CASE("solve_z examples and round trip") {
  auto [z1, z2] = solve_z(6, {3, 2}, 1i, 1i);
  CHECK(std::abs(z1 - 5.0i) < 1e-12);
  CHECK(std::abs(z2 - 12.0i) < 1e-12);
  const PeriodMatrix z = build_period(6, {3, 2}, z1, z2);
  CHECK(std::abs(z.z3() - 30.0i) < 1e-12);
  CHECK(z.imag_minors().second == doctest::Approx(6.0));

  std::tie(z1, z2) = solve_z(6, {3, 2}, 1i, 2.0i);
  CHECK(std::abs(z1 - 8.0i) < 1e-12);
  CHECK(std::abs(z2 - 18.0i) < 1e-12);

  CHECK_THROWS_AS(solve_z(6, {3, 2}, 1.0, 1i), Error);
  CHECK_THROWS_AS(solve_z(6, {2, 3}, 1i, 1i), Error);
}

TEST_CASE("exponent_report") {
  CHECK(exponent_report(6, {3, 2}) == LocusLabel{6, 2, 3});
  CHECK(exponent_report(90, {15, 12}) == LocusLabel{90, 18, 45});
  CHECK(exponent_report(6, {6, 5}) == LocusLabel{6, 1, 6});
}

TEST_CASE("random periods on every small locus") {
  std::mt19937_64 rng(20);
  std::uniform_real_distribution<double> re(-3, 3), im(0.05, 4);
  for (Int d = 2; d <= 20; ++d)
    for (Int n = 1; n <= 2 * d; ++n)
      for (Int m : complements(d, n)) {
        const LocusLabel label{d, m, n};
        const XYPair xy = xy_from_locus(label);
        const auto e = embeddings(d, xy);
        REQUIRE(exponent_report(d, xy) == label);
        for (const auto* emb : {&e.ex, &e.ey}) {
          const Int s = emb->slope < 0 ? -emb->slope : emb->slope;
          const Int l = oracle::lcm(d, s);
          REQUIRE(oracle::euclid(l / emb->slope, l / d) == 1);
          REQUIRE(emb->exponent == std::abs(pairing(emb->v1, emb->v2, d)));
        }
        const auto rel = relation_from_xy(d, xy);
        for (int i = 0; i < 20; ++i) {
          const Complex te(re(rng), im(rng)), tf(re(rng), im(rng));
          const auto [z1, z2] = solve_z(d, xy, te, tf);
          const PeriodMatrix z = build_period(d, xy, z1, z2);
          REQUIRE(z.in_siegel_space());
          REQUIRE(verify_membership(d, xy, z1, z2, e.ex));
          REQUIRE(verify_membership(d, xy, z1, z2, e.ey));
          const double scale = std::max(1.0, z.matrix().norm());
          REQUIRE(std::abs(evaluate(rel, z.z1(), z.z2(), z.z3())) < 1e-10 * scale);
          const auto [be, bf] = curve_periods(d, xy, z);
          REQUIRE(std::abs(be - te) < 1e-9 * std::max(1.0, std::abs(te)));
          REQUIRE(std::abs(bf - tf) < 1e-9 * std::max(1.0, std::abs(tf)));
        }
      }
}

TEST_CASE("solve_z always lands in the Siegel space") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(-10, 10), im(1e-3, 10);
  const XYPair pairs[] = {{3, 2}, {45, 36}, {6, 5}, {-3, -4}, {15, 12}};
  const Int ds[] = {6, 90, 6, 6, 90};
  for (int i = 0; i < 10000; ++i) {
    const int k = i % 5;
    const auto [z1, z2] = solve_z(ds[k], pairs[k], {re(rng), im(rng)}, {re(rng), im(rng)});
    REQUIRE_NOTHROW(build_period(ds[k], pairs[k], z1, z2));
  }
}
