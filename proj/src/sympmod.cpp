#include "abelocus/sympmod.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

namespace abelocus {

namespace {

Int reduce(Int v, Int n) {
  const Int r = v % n;
  return r < 0 ? r + n : r;
}

std::string text(Int v) { return std::to_string(v); }

void require_bound(Int modulus, const char* what) {
  detail::require_positive(modulus, what);
  const __int128 n = modulus;
  if (n * n * n * n > kEnumerationBound)
    fail(ErrorKind::BoundExceeded,
         std::string(what) + ": modulus " + text(modulus) +
             " exceeds the enumeration bound (modulus^4 <= " +
             text(kEnumerationBound) + ")");
}

void require_coprime_divisors(Int modulus, Int a, Int b, const char* what) {
  detail::require_positive(a, what);
  detail::require_positive(b, what);
  if (std::gcd(a, b) != 1 || modulus % a != 0 || modulus % b != 0)
    fail(ErrorKind::InvalidArgument,
         std::string(what) + ": need coprime divisors a, b of " + text(modulus) +
             ", got a = " + text(a) + ", b = " + text(b));
}

void require_abcd(Int a, Int b, Int c, Int d, const char* what) {
  for (Int v : {a, b, c, d}) detail::require_positive(v, what);
  if (c < 2)
    fail(ErrorKind::InvalidArgument, std::string(what) + ": need c >= 2");
  if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1)
    fail(ErrorKind::InvalidArgument,
         std::string(what) + ": a, b, c must be pairwise coprime");
  if (d % a != 0 || d % b != 0)
    fail(ErrorKind::InvalidArgument,
         std::string(what) + ": a and b must divide d");
}

std::vector<Index> sorted_unique(std::vector<Index> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Index> intersect(const std::vector<Index>& l,
                             const std::vector<Index>& r) {
  std::vector<Index> out;
  std::set_intersection(l.begin(), l.end(), r.begin(), r.end(),
                        std::back_inserter(out));
  return out;
}

bool subset(const std::vector<Index>& small, const std::vector<Index>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Index> concat(const std::vector<Subgroup>& parts) {
  std::vector<Index> out;
  for (const auto& p : parts)
    out.insert(out.end(), p.elements().begin(), p.elements().end());
  return out;
}

// All allowable K inside Z_{cd}^4, each generated by two elements of order c
// in the c-torsion d*Z_{cd}^4.
std::vector<Subgroup> enumerate_allowable(const SymplecticModule& module, Int c,
                                          Int d) {
  const Subgroup torsion = module.multiples(d);
  std::vector<Index> order_c;
  for (Index i : torsion.elements())
    if (module.order(i) == c) order_c.push_back(i);

  std::set<std::vector<Index>> seen;
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < order_c.size(); ++i) {
    if (module.in_E(order_c[i]) || module.in_F(order_c[i])) continue;
    for (std::size_t j = i + 1; j < order_c.size(); ++j) {
      Subgroup k = module.span({module.vector(order_c[i]), module.vector(order_c[j])});
      if (static_cast<Int>(k.order()) != c * c) continue;
      if (!seen.insert(k.elements()).second) continue;
      if (is_allowable(k, c, d)) out.push_back(std::move(k));
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

ModVector::ModVector(Int modulus, const Coords4& coords) : modulus_(modulus) {
  detail::require_positive(modulus, "ModVector");
  coords_ = coords.unaryExpr([modulus](Int v) { return reduce(v, modulus); });
}

ModVector ModVector::operator+(const ModVector& o) const {
  if (o.modulus_ != modulus_)
    fail(ErrorKind::InvalidArgument, "ModVector: mismatched moduli");
  return ModVector(modulus_, coords_ + o.coords_);
}

ModVector ModVector::operator-() const { return ModVector(modulus_, -coords_); }

ModVector ModVector::operator*(Int k) const {
  return ModVector(modulus_, coords_ * reduce(k, modulus_));
}

Int element_order(const ModVector& v) {
  Int g = v.modulus();
  for (int i = 0; i < 4; ++i) g = std::gcd(g, v[i]);
  return v.modulus() / g;
}

SymplecticForm SymplecticForm::standard(Int modulus) {
  Mat4 g = Mat4::Zero();
  g(0, 1) = 1;
  g(1, 0) = -1;
  g(2, 3) = 1;
  g(3, 2) = -1;
  return {modulus, g};
}

Int SymplecticForm::operator()(const ModVector& x, const ModVector& y) const {
  return reduce(x.coords().dot(gram * y.coords()), modulus);
}

// ---------------------------------------------------------------------------

bool Subgroup::contains(Index i) const {
  return std::binary_search(elements_.begin(), elements_.end(), i);
}

bool Subgroup::contains(const ModVector& v) const {
  const Int n = modulus_;
  const Coords4& c = v.coords();
  return contains(static_cast<Index>(((c(0) * n + c(1)) * n + c(2)) * n + c(3)));
}

std::size_t Subgroup::intersection_size(const Subgroup& o) const {
  return intersect(elements_, o.elements_).size();
}

// ---------------------------------------------------------------------------

SymplecticModule::SymplecticModule(Int modulus)
    : n_(modulus), size_(0), form_(SymplecticForm::standard(modulus)) {
  require_bound(modulus, "SymplecticModule");
  size_ = static_cast<Index>(modulus * modulus * modulus * modulus);
}

Index SymplecticModule::index(const ModVector& v) const {
  if (v.modulus() != n_)
    fail(ErrorKind::InvalidArgument, "SymplecticModule: mismatched modulus");
  const Coords4& c = v.coords();
  return static_cast<Index>(((c(0) * n_ + c(1)) * n_ + c(2)) * n_ + c(3));
}

ModVector SymplecticModule::vector(Index i) const {
  Coords4 c;
  Int rest = i;
  for (int k = 3; k >= 0; --k) {
    c(k) = rest % n_;
    rest /= n_;
  }
  return ModVector(n_, c);
}

Index SymplecticModule::add(Index i, Index j) const {
  return index(vector(i) + vector(j));
}

Index SymplecticModule::scale(Int k, Index i) const {
  return index(vector(i) * k);
}

Int SymplecticModule::order(Index i) const { return element_order(vector(i)); }

bool SymplecticModule::in_E(Index i) const { return i % (n_ * n_) == 0; }

bool SymplecticModule::in_F(Index i) const {
  return static_cast<Int>(i) < n_ * n_;
}

Subgroup SymplecticModule::from_elements(std::vector<ModVector> gens,
                                         std::vector<Index> elems) const {
  Subgroup s;
  s.modulus_ = n_;
  s.generators_ = std::move(gens);
  s.elements_ = sorted_unique(std::move(elems));
  return s;
}

Subgroup SymplecticModule::span(const std::vector<ModVector>& generators) const {
  std::vector<Index> gens;
  for (const auto& g : generators) gens.push_back(index(g));
  std::unordered_set<Index> seen{0};
  std::vector<Index> elems{0};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (Index g : gens) {
      const Index next = add(elems[head], g);
      if (seen.insert(next).second) elems.push_back(next);
    }
  return from_elements(generators, std::move(elems));
}

Subgroup SymplecticModule::cyclic(const ModVector& generator) const {
  const Int ord = element_order(generator);
  std::vector<Index> elems;
  elems.reserve(static_cast<std::size_t>(ord));
  for (Int k = 0; k < ord; ++k) elems.push_back(index(generator * k));
  return from_elements({generator}, std::move(elems));
}

Subgroup SymplecticModule::E() const {
  return span({ModVector(n_, 1, 0, 0, 0), ModVector(n_, 0, 1, 0, 0)});
}

Subgroup SymplecticModule::F() const {
  return span({ModVector(n_, 0, 0, 1, 0), ModVector(n_, 0, 0, 0, 1)});
}

Subgroup SymplecticModule::multiples(Int k) const {
  std::vector<char> hit(size_, 0);
  for (Index i = 0; i < size_; ++i) hit[scale(k, i)] = 1;
  std::vector<Index> elems;
  for (Index i = 0; i < size_; ++i)
    if (hit[i]) elems.push_back(i);
  std::vector<ModVector> gens;
  for (int j = 0; j < 4; ++j) {
    Coords4 c = Coords4::Zero();
    c(j) = k;
    gens.emplace_back(n_, c);
  }
  return from_elements(std::move(gens), std::move(elems));
}

Index SymplecticModule::act(const Mat4& g, Index i) const {
  return index(ModVector(n_, g * vector(i).coords()));
}

Subgroup SymplecticModule::act(const Mat4& g, const Subgroup& s) const {
  std::vector<ModVector> gens;
  for (const auto& v : s.generators()) gens.emplace_back(n_, g * v.coords());
  std::vector<Index> elems;
  elems.reserve(s.order());
  for (Index i : s.elements()) elems.push_back(act(g, i));
  return from_elements(std::move(gens), std::move(elems));
}

std::size_t SymplecticModule::count_in_E(const Subgroup& s) const {
  return std::count_if(s.elements().begin(), s.elements().end(),
                       [this](Index i) { return in_E(i); });
}

std::size_t SymplecticModule::count_in_F(const Subgroup& s) const {
  return std::count_if(s.elements().begin(), s.elements().end(),
                       [this](Index i) { return in_F(i); });
}

// ---------------------------------------------------------------------------

ModVector divide_by_cofactor(const ModVector& x, Int k) {
  const Int n = x.modulus();
  detail::require_positive(k, "divide_by_cofactor");
  if (n % k != 0 || element_order(x) != k)
    fail(ErrorKind::InvalidArgument,
         "divide_by_cofactor: expected an element of order k with k | N");
  const SymplecticModule module(n);
  const Index target = module.index(x);
  for (Index i = 0; i < module.size(); ++i)
    if (module.order(i) == n && module.scale(n / k, i) == target)
      return module.vector(i);
  fail(ErrorKind::LemmaViolation,
       "divide_by_cofactor: no element of order N divides the given element");
}

bool torsion_check(const Subgroup& sub, Int k) {
  const Int n = sub.modulus();
  detail::require_positive(k, "torsion_check");
  if (n % k != 0)
    fail(ErrorKind::InvalidArgument, "torsion_check: k must divide N");
  const SymplecticModule module(n);
  std::vector<Index> torsion, multiples;
  for (Index i : sub.elements()) {
    if (module.scale(k, i) == 0) torsion.push_back(i);
    multiples.push_back(module.scale(n / k, i));
  }
  return torsion == sorted_unique(std::move(multiples));
}

Subgroup standard_G(Int modulus, Int a, Int b) {
  require_coprime_divisors(modulus, a, b, "standard_G");
  const SymplecticModule module(modulus);
  Subgroup g = module.cyclic(ModVector(modulus, b, 0, a, 0));
  ABELOCUS_ASSERT(static_cast<Int>(g.order()) == modulus);
  ABELOCUS_ASSERT(static_cast<Int>(module.count_in_E(g)) == a);
  ABELOCUS_ASSERT(static_cast<Int>(module.count_in_F(g)) == b);
  return g;
}

bool is_allowable(const Subgroup& K, Int c, Int d) {
  const Int n = c * d;
  if (K.modulus() != n || static_cast<Int>(K.order()) != c * c) return false;
  const SymplecticModule module(n);
  // Z_c^2 is the only group of order c^2 whose k-torsion has k^2 elements for
  // every k | c.
  for (Int k : divisors(c)) {
    const auto torsion = std::count_if(
        K.elements().begin(), K.elements().end(),
        [&](Index i) { return module.scale(k, i) == 0; });
    if (torsion != k * k) return false;
  }
  if (module.count_in_E(K) != 1 || module.count_in_F(K) != 1) return false;

  // w_K(dP, dQ) = w(P, Q) mod c.
  std::vector<ModVector> lifts;
  for (Index i : K.elements()) {
    const ModVector v = module.vector(i);
    if ((v.coords().array() != (v.coords() / d * d).array()).any()) return false;
    lifts.emplace_back(n, v.coords() / d);
  }
  for (const auto& p : lifts)
    for (const auto& q : lifts)
      if (module.form()(p, q) % c != 0) return false;
  return true;
}

IsotropicData standard_K(Int a, Int b, Int c, Int d) {
  require_abcd(a, b, c, d, "standard_K");
  const Int n = c * d;
  const SymplecticModule module(n);
  const ModVector g1(n, d * b, 0, d * a, 0);
  const ModVector g2(n, 0, d * a, 0, -d * b);
  IsotropicData data{c, d, std::gcd(c, d), c / std::gcd(c, d), module.span({g1, g2})};
  if (element_order(g1) != c || element_order(g2) != c ||
      !is_allowable(data.K, c, d))
    fail(ErrorKind::InvalidArgument,
         "standard_K: the standard subgroup is not allowable for these "
         "parameters");
  return data;
}

Mat4 block_action(const Mat2& a, const Mat2& b) {
  Mat4 g = Mat4::Zero();
  g.topLeftCorner<2, 2>() = a;
  g.bottomRightCorner<2, 2>() = b;
  return g;
}

std::vector<Mat4> symplectic_generators(Int modulus) {
  detail::require_positive(modulus, "symplectic_generators");
  Mat2 s, t;
  s << 0, -1, 1, 0;
  t << 1, 1, 0, 1;
  const Mat2 id = Mat2::Identity();
  return {block_action(s, id), block_action(t, id), block_action(id, s),
          block_action(id, t)};
}

std::vector<Mat2> sl2_elements(Int modulus) {
  require_bound(modulus, "sl2_elements");
  std::vector<Mat2> out;
  for (Int a = 0; a < modulus; ++a)
    for (Int b = 0; b < modulus; ++b)
      for (Int c = 0; c < modulus; ++c)
        for (Int d = 0; d < modulus; ++d)
          if (reduce(a * d - b * c, modulus) == reduce(1, modulus)) {
            Mat2 m;
            m << a, b, c, d;
            out.push_back(m);
          }
  return out;
}

Int sl2_order(Int modulus) {
  detail::require_positive(modulus, "sl2_order");
  Int r = modulus * modulus * modulus;
  for (const auto& [p, e] : factorize(modulus).factors) r = r / (p * p) * (p * p - 1);
  return r;
}

std::set<std::vector<Index>> orbit(const SymplecticModule& module,
                                   const std::vector<Subgroup>& start,
                                   const std::vector<Mat4>& generators) {
  std::set<std::vector<Index>> seen{concat(start)};
  std::deque<std::vector<Subgroup>> queue{start};
  while (!queue.empty()) {
    const std::vector<Subgroup> cur = std::move(queue.front());
    queue.pop_front();
    for (const Mat4& g : generators) {
      std::vector<Subgroup> next;
      next.reserve(cur.size());
      for (const auto& s : cur) next.push_back(module.act(g, s));
      if (seen.insert(concat(next)).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

TransitivityReport verify_transitive_G(Int modulus, Int a, Int b) {
  require_coprime_divisors(modulus, a, b, "verify_transitive_G");
  const SymplecticModule module(modulus);
  std::set<std::vector<Index>> all;
  for (Index i = 0; i < module.size(); ++i) {
    if (module.order(i) != modulus) continue;
    const Subgroup g = module.cyclic(module.vector(i));
    if (static_cast<Int>(module.count_in_E(g)) == a &&
        static_cast<Int>(module.count_in_F(g)) == b)
      all.insert(g.elements());
  }
  const auto orb = orbit(module, {standard_G(modulus, a, b)},
                         symplectic_generators(modulus));
  return {all.size(), orb.size(), orb == all};
}

AllowableReport verify_allowable_K(Int a, Int b, Int c, Int d) {
  const IsotropicData data = standard_K(a, b, c, d);
  const SymplecticModule module(c * d);
  std::set<std::vector<Index>> all;
  for (const auto& k : enumerate_allowable(module, c, d)) all.insert(k.elements());
  const auto orb = orbit(module, {data.K}, symplectic_generators(c * d));
  return {all.size(), orb.size(), orb == all};
}

// ---------------------------------------------------------------------------

QuotientGroup::QuotientGroup(const SymplecticModule& module, const Subgroup& K)
    : module_(&module) {
  if (K.modulus() != module.modulus())
    fail(ErrorKind::InvalidArgument, "QuotientGroup: mismatched modulus");
  constexpr Index kUnset = ~Index{0};
  coset_.assign(module.size(), kUnset);
  for (Index i = 0; i < module.size(); ++i) {
    if (coset_[i] != kUnset) continue;
    const Index id = static_cast<Index>(reps_.size());
    reps_.push_back(i);
    for (Index k : K.elements()) coset_[module.add(i, k)] = id;
  }
  std::vector<Index> e, f;
  for (Index i = 0; i < module.size(); ++i) {
    if (module.in_E(i)) e.push_back(i);
    if (module.in_F(i)) f.push_back(i);
  }
  e_image_ = image(e);
  f_image_ = image(f);
}

Index QuotientGroup::add(Index p, Index q) const {
  return coset_[module_->add(reps_[p], reps_[q])];
}

Index QuotientGroup::scale(Int k, Index p) const {
  return coset_[module_->scale(k, reps_[p])];
}

Int QuotientGroup::order_of(Index p) const {
  Int k = 1;
  for (Index acc = p; acc != 0; acc = add(acc, p)) ++k;
  return k;
}

std::vector<Index> QuotientGroup::image(const std::vector<Index>& elements) const {
  std::vector<Index> out;
  out.reserve(elements.size());
  for (Index i : elements) out.push_back(coset_[i]);
  return sorted_unique(std::move(out));
}

std::vector<Index> QuotientGroup::preimage(const std::vector<Index>& cosets) const {
  std::vector<char> mark(reps_.size(), 0);
  for (Index p : cosets) mark[p] = 1;
  std::vector<Index> out;
  for (Index i = 0; i < coset_.size(); ++i)
    if (mark[coset_[i]]) out.push_back(i);
  return out;
}

std::vector<Index> QuotientGroup::cyclic(Index p) const {
  std::vector<Index> out{0};
  for (Index acc = p; acc != 0; acc = add(acc, p)) out.push_back(acc);
  return sorted_unique(std::move(out));
}

IntersectionReport check_intersection_lemma(const IsotropicData& data) {
  const SymplecticModule module(data.c * data.d);
  const QuotientGroup x(module, data.K);
  const auto meet = intersect(x.e_image(), x.f_image());

  std::vector<Index> de, df;
  const Subgroup e = module.E(), f = module.F();
  for (Index i : e.elements()) de.push_back(module.scale(data.d, i));
  for (Index i : f.elements()) df.push_back(module.scale(data.d, i));

  IntersectionReport r;
  r.quotient_order = x.order();
  r.meet_is_image_of_dE = meet == x.image(de);
  r.meet_is_image_of_dF = meet == x.image(df);
  r.preimage_is_dE_plus_dF =
      x.preimage(meet) == module.multiples(data.d).elements();
  return r;
}

DominationReport verify_domination(Int c, Int d, Int a, Int b) {
  const IsotropicData data = standard_K(a, b, c, d);
  const SymplecticModule module(c * d);
  const QuotientGroup x(module, data.K);
  const auto meet = intersect(x.e_image(), x.f_image());
  const std::vector<Index> zero{0};
  const Int ld = data.l * d;

  // Cyclic subgroups of L = pi^-1(X[d]) of order l*d.
  std::set<std::vector<Index>> lifts;
  for (Index i = 0; i < module.size(); ++i)
    if (module.order(i) == ld && data.K.contains(module.scale(d, i)))
      lifts.insert(module.cyclic(module.vector(i)).elements());

  DominationReport r;
  r.lifts = lifts.size();
  r.images_valid = true;
  std::set<std::vector<Index>> images;
  for (const auto& lift : lifts) {
    auto img = x.image(lift);
    const bool cyclic_of_order_d =
        static_cast<Int>(img.size()) == d &&
        std::any_of(img.begin(), img.end(),
                    [&](Index p) { return x.order_of(p) == d; });
    if (!cyclic_of_order_d || intersect(img, meet) != zero)
      r.images_valid = false;
    images.insert(std::move(img));
  }

  std::set<std::vector<Index>> targets;
  for (Index p = 0; p < x.order(); ++p) {
    if (x.order_of(p) != d) continue;
    auto cyc = x.cyclic(p);
    if (intersect(cyc, meet) == zero) targets.insert(std::move(cyc));
  }
  r.targets = targets.size();
  r.surjective = std::includes(images.begin(), images.end(), targets.begin(),
                               targets.end());
  return r;
}

PairReport verify_technical1(Int a, Int b, Int c, Int d) {
  const IsotropicData data = standard_K(a, b, c, d);
  const Int n = c * d;
  const Int ld = data.l * d;
  const SymplecticModule module(n);

  const std::vector<Subgroup> ks = enumerate_allowable(module, c, d);
  const std::vector<Index> d_multiples = module.multiples(d).elements();

  // Cyclic G of order l*d (inside the (l*d)-torsion c~*Z^4) with the
  // prescribed intersections with E and F.
  std::set<std::vector<Index>> gs;
  const Subgroup torsion = module.multiples(data.c_tilde);
  for (Index i : torsion.elements()) {
    if (module.order(i) != ld) continue;
    const Subgroup g = module.cyclic(module.vector(i));
    if (static_cast<Int>(module.count_in_E(g)) == a &&
        static_cast<Int>(module.count_in_F(g)) == b)
      gs.insert(g.elements());
  }

  // The part of G inside dE + dF must be G n K, of order l: G maps to a
  // subgroup of X meeting E' n F' trivially.
  std::set<std::vector<Index>> pairs;
  for (const auto& k : ks)
    for (const auto& g : gs) {
      const auto gk = intersect(g, k.elements());
      if (static_cast<Int>(gk.size()) != data.l) continue;
      if (!subset(intersect(g, d_multiples), k.elements())) continue;
      std::vector<Index> key = k.elements();
      key.insert(key.end(), g.begin(), g.end());
      pairs.insert(std::move(key));
    }

  const Subgroup g_std = module.cyclic(
      ModVector(n, data.c_tilde * b, 0, data.c_tilde * a, 0));
  std::vector<Index> std_key = data.K.elements();
  std_key.insert(std_key.end(), g_std.elements().begin(), g_std.elements().end());

  PairReport r;
  r.pair_count = pairs.size();
  r.standard_admissible = pairs.count(std_key) > 0;
  const auto orb = orbit(module, {data.K, g_std}, symplectic_generators(n));
  r.orbit_size = orb.size();
  r.single_orbit = r.standard_admissible && orb == pairs;
  return r;
}

}  // namespace abelocus
