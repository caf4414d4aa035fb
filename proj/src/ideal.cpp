#include "epow/ideal.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace epow {

PrimeSupport PrimeSupport::of(std::vector<int> vars, int n) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (int v : vars)
    if (v < 1 || v > n) throw ArgumentError("support index out of range");
  return PrimeSupport{std::move(vars)};
}

PrimeSupport PrimeSupport::full(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return PrimeSupport{std::move(v)};
}

std::uint64_t PrimeSupport::mask() const {
  std::uint64_t m = 0;
  for (int v : vars) m |= std::uint64_t{1} << (v - 1);
  return m;
}

bool PrimeSupport::contains(int var) const {
  return std::binary_search(vars.begin(), vars.end(), var);
}

MonomialIdeal::MonomialIdeal(int n) : n_(n) {
  if (n < 1 || n > kMaxVariables)
    throw ResourceError("ambient dimension must be in 1.." +
                        std::to_string(kMaxVariables));
}

MonomialIdeal MonomialIdeal::zero(int n) { return MonomialIdeal(n); }

MonomialIdeal MonomialIdeal::unit(int n) {
  return from_gens(n, {Monomial::one(n)});
}

MonomialIdeal MonomialIdeal::from_gens(int n, std::vector<Monomial> gens) {
  MonomialIdeal result(n);
  for (const Monomial& g : gens)
    if (g.ambient() != n) throw DimensionError("generator has wrong ambient");

  // Dedup, then keep the divisibility antichain. Buckets by degree so that
  // the common equigenerated case needs no divisibility scans at all.
  std::unordered_set<Monomial, MonomialHash> seen;
  std::map<int, std::vector<Monomial>> by_degree;
  for (Monomial& g : gens)
    if (seen.insert(g).second) by_degree[g.degree()].push_back(std::move(g));

  std::vector<Monomial> kept;
  for (auto& [deg, bucket] : by_degree) {
    (void)deg;
    for (Monomial& cand : bucket) {
      bool dominated = false;
      for (const Monomial& k : kept)
        if (k.degree() < cand.degree() && k.divides(cand)) {
          dominated = true;
          break;
        }
      if (!dominated) kept.push_back(std::move(cand));
    }
  }
  std::sort(kept.begin(), kept.end(), lex_greater);
  result.gens_ = std::move(kept);
  return result;
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0].is_one();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.ambient() != n_) throw DimensionError("monomial has wrong ambient");
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
  if (other.n_ != n_) throw DimensionError("ideal has wrong ambient");
  for (const Monomial& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

MonomialIdeal MonomialIdeal::times(const MonomialIdeal& other) const {
  if (other.n_ != n_) throw DimensionError("ideal has wrong ambient");
  if (is_zero() || other.is_zero()) return zero(n_);
  std::vector<Monomial> products;
  products.reserve(gens_.size() * other.gens_.size());
  for (const Monomial& a : gens_)
    for (const Monomial& b : other.gens_) products.push_back(a.times(b));
  return from_gens(n_, std::move(products));
}

MonomialIdeal MonomialIdeal::power(int k) const {
  if (k < 0) throw ArgumentError("negative ideal power");
  if (k == 0) return unit(n_);
  MonomialIdeal result = *this;
  for (int t = 1; t < k; ++t) result = result.times(*this);
  return result;
}

MonomialIdeal MonomialIdeal::colon(const Monomial& f) const {
  if (f.ambient() != n_) throw DimensionError("monomial has wrong ambient");
  std::vector<Monomial> quotients;
  quotients.reserve(gens_.size());
  for (const Monomial& g : gens_) quotients.push_back(g.colon_quotient(f));
  return from_gens(n_, std::move(quotients));
}

MonomialIdeal MonomialIdeal::colon(const MonomialIdeal& j) const {
  if (j.n_ != n_) throw DimensionError("ideal has wrong ambient");
  if (j.is_zero()) throw ArgumentError("colon by the zero ideal");
  MonomialIdeal result = colon(j.gens_[0]);
  for (std::size_t i = 1; i < j.gens_.size(); ++i)
    result = result.intersect(colon(j.gens_[i]));
  return result;
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  if (other.n_ != n_) throw DimensionError("ideal has wrong ambient");
  if (is_zero() || other.is_zero()) return zero(n_);
  std::vector<Monomial> lcms;
  lcms.reserve(gens_.size() * other.gens_.size());
  for (const Monomial& a : gens_)
    for (const Monomial& b : other.gens_) lcms.push_back(a.lcm(b));
  return from_gens(n_, std::move(lcms));
}

MonomialIdeal MonomialIdeal::localize(const PrimeSupport& keep) const {
  for (int v : keep.vars)
    if (v < 1 || v > n_) throw ArgumentError("support index out of range");
  const std::uint64_t mask = keep.mask();
  std::vector<Monomial> restricted;
  restricted.reserve(gens_.size());
  for (const Monomial& g : gens_) restricted.push_back(g.restrict_to(mask));
  return from_gens(n_, std::move(restricted));
}

Monomial MonomialIdeal::lcm_of_gens() const {
  if (is_zero()) throw ArgumentError("zero ideal has no generators");
  Monomial l = gens_[0];
  for (std::size_t i = 1; i < gens_.size(); ++i) l = l.lcm(gens_[i]);
  return l;
}

int MonomialIdeal::common_degree() const {
  if (is_zero()) return -1;
  int d = gens_[0].degree();
  for (const Monomial& g : gens_)
    if (g.degree() != d) return -1;
  return d;
}

MonomialIdeal prime_ideal(const PrimeSupport& support, int n) {
  std::vector<Monomial> vars;
  vars.reserve(support.vars.size());
  for (int v : support.vars) vars.push_back(Monomial::variable(n, v));
  return MonomialIdeal::from_gens(n, std::move(vars));
}

} // namespace epow
