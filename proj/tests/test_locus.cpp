#include <doctest.h>

#include <random>

#include "abelocus/arith.hpp"
#include "abelocus/error.hpp"
#include "abelocus/locus.hpp"
#include "oracles.hpp"

using namespace abelocus;

TEST_CASE("is_complementary examples") {
  CHECK(is_complementary(6, 2, 3));
  CHECK(is_complementary(6, 1, 6));
  CHECK(is_complementary(90, 18, 45));
  CHECK_FALSE(is_complementary(1, 2, 3));
  CHECK_THROWS_AS(is_complementary(0, 1, 1), Error);
}

TEST_CASE("principal type forces equal exponents") {
  for (Int m = 1; m <= 100; ++m)
    for (Int n = 1; n <= 100; ++n) REQUIRE(is_complementary(1, m, n) == (m == n));
}

TEST_CASE("complementarity is symmetric and matches the oracle") {
  for (Int d = 1; d <= 30; ++d)
    for (Int m = 1; m <= 60; ++m)
      for (Int n = 1; n <= 60; ++n) {
        REQUIRE(is_complementary(d, m, n) == is_complementary(d, n, m));
        REQUIRE(is_complementary(d, m, n) == oracle::complementary(d, m, n));
      }
}

TEST_CASE("no overflow near the 64-bit edge") {
  // m*n alone overflows; the reduced form stays exact.
  const Int big = Int{1} << 40;
  CHECK(is_complementary(1, big, big));
  CHECK_FALSE(is_complementary(1, big, big + 1));
  CHECK(is_complementary(big, 1, big));
}

TEST_CASE("decompose examples") {
  auto dec = decompose({6, 2, 3});
  CHECK(dec.a == 3);
  CHECK(dec.b == 2);
  CHECK(dec.c == 1);
  CHECK(dec.g == 1);
  dec = decompose({90, 18, 45});
  CHECK(dec.a == 5);
  CHECK(dec.b == 2);
  CHECK(dec.c == 1);
  CHECK(dec.g == 9);
  dec = decompose({5, 35, 7});
  CHECK(dec.a == 1);
  CHECK(dec.b == 5);
  CHECK(dec.c == 7);
  CHECK(dec.g == 7);
  try {
    decompose({1, 2, 3});
    FAIL("expected not-complementary");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotComplementary);
  }
}

TEST_CASE("decompose matches the brute-force (a, b, c) search and round-trips") {
  for (Int d = 1; d <= 40; ++d)
    for (Int n = 1; n <= 80; ++n)
      for (Int m : complements(d, n)) {
        const auto dec = decompose({d, m, n});
        REQUIRE(dec.c * d / dec.a == m);
        REQUIRE(dec.c * d / dec.b == n);
        REQUIRE(d % dec.a == 0);
        REQUIRE(d % dec.b == 0);
        REQUIRE(oracle::euclid(dec.a, dec.b) == 1);
        REQUIRE(oracle::euclid(dec.a, dec.c) == 1);
        REQUIRE(oracle::euclid(dec.b, dec.c) == 1);
        REQUIRE(dec.g == oracle::euclid(m, n));

        // Independent search: the triple is unique among divisors a, b of d.
        int hits = 0;
        for (Int a = 1; a <= d; ++a)
          for (Int b = 1; b <= d; ++b) {
            if (d % a || d % b || (m * a) % d) continue;
            const Int c = m * a / d;
            if (c * d / b != n || (c * d) % b) continue;
            if (oracle::euclid(a, b) != 1 || oracle::euclid(a, c) != 1 ||
                oracle::euclid(b, c) != 1)
              continue;
            ++hits;
            REQUIRE(a == dec.a);
            REQUIRE(b == dec.b);
          }
        REQUIRE(hits == 1);
      }
}

TEST_CASE("complements examples") {
  CHECK(complements(6, 1) == std::vector<Int>{6});
  CHECK(complements(6, 6) == std::vector<Int>{1, 2, 3, 6});
  CHECK(complements(5, 7) == std::vector<Int>{35});
  CHECK(complements_via_q(6, 1) == std::vector<Int>{6});
  CHECK(complements_via_q(6, 6) == std::vector<Int>{1, 2, 3, 6});
  // Scan-verified value for d = 90, n = 45.
  CHECK(complements(90, 45) == std::vector<Int>{2, 6, 10, 18, 30, 90});
  CHECK(complements_via_q(90, 45) == std::vector<Int>{2, 6, 10, 18, 30, 90});
  CHECK(oracle::scan_complements(90, 45, 90 * 90 * 45) ==
        std::vector<Int>{2, 6, 10, 18, 30, 90});
}

TEST_CASE("component_count examples") {
  CHECK(component_count(6, 6) == 4);
  CHECK(component_count(6, 1) == 1);
  CHECK(component_count(90, 45) == 6);
}

TEST_CASE("complement constructions agree with the scan for d, n <= 40") {
  for (Int d = 1; d <= 40; ++d)
    for (Int n = 1; n <= 40; ++n) {
      const auto scan = oracle::scan_complements(d, n, d * d * n);
      REQUIRE(complements(d, n) == scan);
      REQUIRE(complements_via_q(d, n) == scan);
      REQUIRE(component_count(d, n) == static_cast<Int>(scan.size()));
    }
}

TEST_CASE("extreme cases of the complement count") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> pick_d(1, 60), pick_k(1, 40);
  for (int i = 0; i < 200; ++i) {
    const Int d = pick_d(rng), k = pick_k(rng);
    REQUIRE(complements(d, d * d * k) == std::vector<Int>{d * d * k});
    Int n = pick_k(rng);
    while (oracle::euclid(n, d) != 1) ++n;
    REQUIRE(complements(d, n) == std::vector<Int>{d * n});
    Int c = pick_k(rng);
    while (oracle::euclid(c, d) != 1) ++c;
    REQUIRE(component_count(d, c * d) == oracle::sigma(d));
    REQUIRE(complements(d, c * d).size() == static_cast<std::size_t>(oracle::sigma(d)));
  }
}

TEST_CASE("product_type") {
  auto p = product_type(1, 6);
  CHECK(p.type == std::pair<Int, Int>{1, 6});
  CHECK(p.exponents == std::pair<Int, Int>{1, 6});
  p = product_type(4, 4);
  CHECK(p.type == std::pair<Int, Int>{4, 4});
  CHECK(p.exponents == std::pair<Int, Int>{1, 1});
  p = product_type(2, 3);
  CHECK(p.type == std::pair<Int, Int>{1, 6});
  CHECK(p.exponents == std::pair<Int, Int>{2, 3});
  p = product_type(4, 6);
  CHECK(p.type == std::pair<Int, Int>{2, 12});
  CHECK(p.exponents == std::pair<Int, Int>{2, 3});
}
