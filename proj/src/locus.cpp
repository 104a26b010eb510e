#include "abelocus/locus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace abelocus {

namespace {

std::string label_text(Int d, Int m, Int n) {
  return "(d=" + std::to_string(d) + ", m=" + std::to_string(m) +
         ", n=" + std::to_string(n) + ")";
}

}  // namespace

bool is_complementary(Int d, Int m, Int n) {
  detail::require_positive(d, "is_complementary");
  detail::require_positive(m, "is_complementary");
  detail::require_positive(n, "is_complementary");
  // Dividing through by gcd(m,n)^2 leaves (m/g)*(n/g)*gcd(g,d) == d.
  const Int g = std::gcd(m, n);
  const __int128 prod = static_cast<__int128>(m / g) * (n / g);
  if (prod > d) return false;
  return prod * std::gcd(g, d) == d;
}

Decomposition decompose(const LocusLabel& label) {
  const auto [d, m, n] = label;
  if (!is_complementary(d, m, n))
    fail(ErrorKind::NotComplementary,
         "decompose: " + label_text(d, m, n) + " is not complementary");
  Decomposition out;
  out.g = std::gcd(m, n);
  out.a = n / out.g;
  out.b = m / out.g;
  const __int128 num = static_cast<__int128>(out.g) * out.a * out.b;
  ABELOCUS_ASSERT(num % d == 0);
  out.c = static_cast<Int>(num / d);

  ABELOCUS_ASSERT(d % out.a == 0 && d % out.b == 0);
  ABELOCUS_ASSERT(std::gcd(out.a, out.b) == 1 && std::gcd(out.a, out.c) == 1 &&
                  std::gcd(out.b, out.c) == 1);
  ABELOCUS_ASSERT(out.c * (d / out.a) == m && out.c * (d / out.b) == n);
  return out;
}

std::vector<Int> complements(Int d, Int n) {
  const auto fn = factorize(n);
  const auto fd = factorize(d);
  std::map<Int, std::pair<int, int>> vals;  // prime -> (v_p(n), v_p(d))
  for (const auto& [p, e] : fn.factors) vals[p].first = e;
  for (const auto& [p, e] : fd.factors) vals[p].second = e;

  std::vector<Int> out{1};
  for (const auto& [p, v] : vals) {
    const auto [alpha, beta] = v;
    // Admissible valuations of m at p.
    int lo = alpha, hi = alpha;
    if (alpha == beta) lo = 0;
    if (alpha < beta) lo = hi = beta;

    std::vector<Int> next;
    for (Int base : out) {
      Int pk = 1;
      for (int k = 0; k < lo; ++k) pk = detail::checked_mul(pk, p, "complements");
      for (int k = lo; k <= hi; ++k) {
        next.push_back(detail::checked_mul(base, pk, "complements"));
        if (k < hi) pk = detail::checked_mul(pk, p, "complements");
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> complements_via_q(Int d, Int n) {
  detail::require_positive(d, "complements_via_q");
  detail::require_positive(n, "complements_via_q");
  const Int g = std::gcd(n, d);
  const Int a = d / g;
  const Int c = n / g;
  std::vector<Int> out;
  for (Int q : divisors(d)) {
    if (q % a != 0) continue;
    const Int b = q / a;
    if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1)
      continue;
    out.push_back(detail::checked_mul(c, d / b, "complements_via_q"));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Int component_count(Int d, Int n) { return mu(n, d); }

ProductType product_type(Int a, Int b) {
  const auto [g, l] = gcd_lcm(a, b);
  return {{g, l}, {a / g, b / g}};
}

}  // namespace abelocus
