#pragma once

// Exact integer number theory used throughout the library. Everything here is
// header-only and templated on the integer type; `Int` is the working type of
// the rest of the code.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "abelocus/error.hpp"

namespace abelocus {

using Int = std::int64_t;

/// Largest value accepted by factorize and everything built on it.
inline constexpr std::uint64_t kFactorBound =
    static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());

template <std::integral T>
struct GcdLcm {
  T gcd;
  T lcm;
  friend bool operator==(const GcdLcm&, const GcdLcm&) = default;
};

template <std::integral T>
struct PrimePower {
  T prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

template <std::integral T>
struct Factorization {
  T value{1};
  std::vector<PrimePower<T>> factors;  // strictly increasing primes

  /// Exponent of `p` in `value`; zero if `p` does not divide it.
  int valuation(T p) const {
    for (const auto& f : factors)
      if (f.prime == p) return f.exponent;
    return 0;
  }
};

template <std::integral T>
struct BezoutWitness {
  T a, b, c;
  T u, v;  // a*u - b*v == c
};

template <std::integral T>
struct MuSplit {
  T n, d;
  T n_tilde, d_tilde, t;  // n == n_tilde*t, d == d_tilde*t
};

namespace detail {

template <std::integral T>
T checked_mul(T x, T y, const char* what) {
  T r;
  if (__builtin_mul_overflow(x, y, &r))
    fail(ErrorKind::UnsupportedMagnitude,
         std::string(what) + ": product exceeds integer range");
  return r;
}

template <std::integral T>
void require_positive(T x, const char* what) {
  if (x < 1)
    fail(ErrorKind::InvalidArgument,
         std::string(what) + ": expected a positive integer, got " +
             std::to_string(x));
}

}  // namespace detail

template <std::integral T>
GcdLcm<T> gcd_lcm(T x, T y) {
  detail::require_positive(x, "gcd_lcm");
  detail::require_positive(y, "gcd_lcm");
  const T g = std::gcd(x, y);
  return {g, detail::checked_mul<T>(x / g, y, "lcm")};
}

/// Trial division up to sqrt(x). Inputs above kFactorBound are rejected.
template <std::integral T>
Factorization<T> factorize(T x) {
  detail::require_positive(x, "factorize");
  if (static_cast<std::uint64_t>(x) > kFactorBound)
    fail(ErrorKind::UnsupportedMagnitude,
         "factorize: input exceeds the trial-division bound 2^63-1");

  Factorization<T> out;
  out.value = x;
  T rest = x;
  auto strip = [&](T p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.factors.push_back({p, e});
  };
  strip(T{2});
  for (T p = 3; p <= rest / p; p += 2) strip(p);
  if (rest > 1) out.factors.push_back({rest, 1});
  return out;
}

template <std::integral T>
T divisor_count(const Factorization<T>& f) {
  T s = 1;
  for (const auto& pp : f.factors) s *= static_cast<T>(pp.exponent + 1);
  return s;
}

template <std::integral T>
T divisor_count(T x) {
  return divisor_count(factorize(x));
}

/// All positive divisors in increasing order.
template <std::integral T>
std::vector<T> divisors(T x) {
  std::vector<T> out{1};
  for (const auto& [p, e] : factorize(x).factors) {
    const std::size_t base = out.size();
    T pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Extended Euclid on non-negative inputs: returns (g, s, t) with
/// s*x + t*y == g == gcd(x, y).
inline std::tuple<__int128, __int128, __int128> extended_gcd(__int128 x,
                                                             __int128 y) {
  __int128 s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (y != 0) {
    const __int128 q = x / y;
    std::tie(x, y) = std::make_pair(y, x - q * y);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  return {x, s0, t0};
}

/// Solves a*u - b*v == c, choosing the smallest u >= 1.
template <std::signed_integral T>
  requires(sizeof(T) <= sizeof(std::int64_t))
BezoutWitness<T> solve_au_bv(T a, T b, T c) {
  detail::require_positive(a, "solve_au_bv");
  detail::require_positive(b, "solve_au_bv");
  detail::require_positive(c, "solve_au_bv");
  auto [g, s, t] = extended_gcd(a, b);
  (void)t;
  if (c % g != 0)
    fail(ErrorKind::NoSolution, "solve_au_bv: gcd(" + std::to_string(a) +
                                    ", " + std::to_string(b) +
                                    ") does not divide " + std::to_string(c));
  // a*u == c (mod b): u == s*(c/g) (mod b/g), where s*a == g (mod b).
  const __int128 step = b / g;
  __int128 u = (s % step) * ((c / g) % step) % step;
  if (u <= 0) u += step;
  const __int128 v = (static_cast<__int128>(a) * u - c) / b;
  ABELOCUS_ASSERT(static_cast<__int128>(a) * u - static_cast<__int128>(b) * v ==
                  c);
  if (u > std::numeric_limits<T>::max() || v > std::numeric_limits<T>::max() ||
      v < std::numeric_limits<T>::min())
    fail(ErrorKind::UnsupportedMagnitude, "solve_au_bv: witness out of range");
  return {a, b, c, static_cast<T>(u), static_cast<T>(v)};
}

/// t is the product of p^k over the primes where n and d share the same
/// valuation k.
template <std::integral T>
MuSplit<T> mu_split(T n, T d) {
  detail::require_positive(n, "mu_split");
  detail::require_positive(d, "mu_split");
  const auto fn = factorize(n);
  const auto fd = factorize(d);
  T t = 1;
  for (const auto& [p, e] : fn.factors)
    if (fd.valuation(p) == e)
      for (int i = 0; i < e; ++i) t *= p;
  return {n, d, n / t, d / t, t};
}

/// Floor square root of a non-negative value; exact for the full range.
inline __int128 isqrt(__int128 x) {
  if (x < 0) fail(ErrorKind::InvalidArgument, "isqrt: negative argument");
  __int128 r = static_cast<__int128>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

inline bool is_perfect_square(__int128 x) {
  if (x < 0) return false;
  const __int128 r = isqrt(x);
  return r * r == x;
}

/// mu(n, d): the number of exponents complementary to n for type (1, d).
template <std::integral T>
T mu(T n, T d) {
  return divisor_count(mu_split(n, d).t);
}

}  // namespace abelocus
