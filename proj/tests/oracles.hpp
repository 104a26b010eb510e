#pragma once

// Brute-force reference implementations. Deliberately naive: loops over
// candidates instead of sharing any logic with the library.

#include <cstdint>
#include <vector>

namespace oracle {

using Int = std::int64_t;

inline Int gcd(Int x, Int y) {
  Int g = 1;
  for (Int k = 1; k <= x && k <= y; ++k)
    if (x % k == 0 && y % k == 0) g = k;
  return g;
}

inline Int lcm(Int x, Int y) {
  for (Int k = x;; k += x)
    if (k % y == 0) return k;
}

inline Int euclid(Int x, Int y) {
  while (y != 0) {
    const Int r = x % y;
    x = y;
    y = r;
  }
  return x < 0 ? -x : x;
}

inline Int sigma(Int x) {
  Int count = 0;
  for (Int k = 1; k <= x; ++k)
    if (x % k == 0) ++count;
  return count;
}

inline bool complementary(Int d, Int m, Int n) {
  const Int g = euclid(m, n);
  return m * n * euclid(g, d) == g * g * d;
}

/// {m <= bound : complementary(d, m, n)}.
inline std::vector<Int> scan_complements(Int d, Int n, Int bound) {
  std::vector<Int> out;
  for (Int m = 1; m <= bound; ++m)
    if (complementary(d, m, n)) out.push_back(m);
  return out;
}

/// max{t : t | gcd(n,d), gcd(n/t, t) == gcd(d/t, t) == 1}.
inline Int mu_t(Int n, Int d) {
  Int best = 1;
  const Int g = euclid(n, d);
  for (Int t = 1; t <= g; ++t)
    if (g % t == 0 && euclid(n / t, t) == 1 && euclid(d / t, t) == 1) best = t;
  return best;
}

}  // namespace oracle
