#include "epow/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace epow {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  if (exps_.empty() || exps_.size() > static_cast<std::size_t>(kMaxVariables))
    throw ResourceError("ambient dimension must be in 1.." +
                        std::to_string(kMaxVariables));
  long long deg = 0;
  for (int e : exps_) {
    if (e < 0) throw ArgumentError("negative exponent");
    deg += e;
  }
  if (deg > kMaxDegree)
    throw ResourceError("monomial degree exceeds " + std::to_string(kMaxDegree));
}

Monomial Monomial::one(int n) { return Monomial(std::vector<int>(n, 0)); }

Monomial Monomial::variable(int n, int index) {
  if (index < 1 || index > n) throw ArgumentError("variable index out of range");
  std::vector<int> e(n, 0);
  e[index - 1] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::from_indices(int n, const std::vector<int>& indices) {
  std::vector<int> e(n, 0);
  for (int i : indices) {
    if (i < 1 || i > n) throw ArgumentError("variable index out of range");
    ++e[i - 1];
  }
  return Monomial(std::move(e));
}

int Monomial::exponent(int index) const {
  if (index < 1 || index > ambient())
    throw ArgumentError("variable index out of range");
  return exps_[index - 1];
}

int Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < ambient(); ++i)
    if (exps_[i] > 0) s.push_back(i + 1);
  return s;
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t m = 0;
  for (int i = 0; i < ambient(); ++i)
    if (exps_[i] > 0) m |= std::uint64_t{1} << i;
  return m;
}

int Monomial::max_var() const {
  for (int i = ambient() - 1; i >= 0; --i)
    if (exps_[i] > 0) return i + 1;
  return 0;
}

int Monomial::min_var() const {
  for (int i = 0; i < ambient(); ++i)
    if (exps_[i] > 0) return i + 1;
  return 0;
}

namespace {
void check_same_ambient(const Monomial& a, const Monomial& b) {
  if (a.ambient() != b.ambient())
    throw DimensionError("monomials live in different ambient rings");
}
} // namespace

bool Monomial::divides(const Monomial& m) const {
  check_same_ambient(*this, m);
  for (int i = 0; i < ambient(); ++i)
    if (exps_[i] > m.exponents()[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& m) const {
  check_same_ambient(*this, m);
  std::vector<int> e(exps_);
  for (int i = 0; i < ambient(); ++i) e[i] += m.exponents()[i];
  return Monomial(std::move(e));
}

Monomial Monomial::pow(int k) const {
  if (k < 0) throw ArgumentError("negative power");
  std::vector<int> e(exps_);
  for (int& x : e) x *= k;
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& m) const {
  check_same_ambient(*this, m);
  std::vector<int> e(ambient());
  for (int i = 0; i < ambient(); ++i)
    e[i] = std::min(exps_[i], m.exponents()[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& m) const {
  check_same_ambient(*this, m);
  std::vector<int> e(ambient());
  for (int i = 0; i < ambient(); ++i)
    e[i] = std::max(exps_[i], m.exponents()[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::divide_by(const Monomial& m) const {
  check_same_ambient(*this, m);
  std::vector<int> e(ambient());
  for (int i = 0; i < ambient(); ++i) {
    e[i] = exps_[i] - m.exponents()[i];
    if (e[i] < 0) throw ArgumentError("inexact monomial division");
  }
  return Monomial(std::move(e));
}

Monomial Monomial::colon_quotient(const Monomial& f) const {
  check_same_ambient(*this, f);
  std::vector<int> e(ambient());
  for (int i = 0; i < ambient(); ++i)
    e[i] = std::max(0, exps_[i] - f.exponents()[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::restrict_to(std::uint64_t keep_mask) const {
  std::vector<int> e(exps_);
  for (int i = 0; i < ambient(); ++i)
    if (!(keep_mask >> i & 1)) e[i] = 0;
  return Monomial(std::move(e));
}

std::string Monomial::str() const {
  std::string s;
  for (int i = 0; i < ambient(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i + 1);
    if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  for (int i = 0; i < a.ambient(); ++i) {
    int d = a.exponents()[i] - b.exponents()[i];
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

int revlex_cmp(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  for (int i = a.ambient() - 1; i >= 0; --i) {
    int d = a.exponents()[i] - b.exponents()[i];
    if (d != 0) return d > 0 ? -1 : 1;
  }
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace epow
