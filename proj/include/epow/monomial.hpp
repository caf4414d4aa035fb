#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "epow/errors.hpp"

namespace epow {

inline constexpr int kMaxVariables = 64;
inline constexpr int kMaxDegree = 1 << 16;

/// A monomial in K[x_1..x_n], stored as its exponent vector.
/// Variables are indexed 1..n in the public interface. Immutable.
class Monomial {
public:
  explicit Monomial(std::vector<int> exps);

  static Monomial one(int n);
  static Monomial variable(int n, int index);
  /// Product of the variables listed in `indices` (repeats allowed).
  static Monomial from_indices(int n, const std::vector<int>& indices);

  int ambient() const { return static_cast<int>(exps_.size()); }
  const std::vector<int>& exponents() const { return exps_; }
  int exponent(int index) const; // 1-based

  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool is_squarefree() const;

  std::vector<int> support() const;
  std::uint64_t support_mask() const;
  int max_var() const; // max(supp), 0 for the monomial 1
  int min_var() const; // min(supp), 0 for the monomial 1

  bool divides(const Monomial& m) const;
  Monomial times(const Monomial& m) const;
  Monomial pow(int k) const;
  Monomial gcd(const Monomial& m) const;
  Monomial lcm(const Monomial& m) const;
  /// Exact division; throws ArgumentError if `m` does not divide this.
  Monomial divide_by(const Monomial& m) const;
  /// this / gcd(this, f): the generator contributed to the colon by f.
  Monomial colon_quotient(const Monomial& f) const;
  /// Sets every exponent outside `keep_mask` (bit i-1 ~ x_i) to zero.
  Monomial restrict_to(std::uint64_t keep_mask) const;

  std::string str() const; // e.g. "x1^2*x3", "1"

  bool operator==(const Monomial&) const = default;

private:
  std::vector<int> exps_;
};

/// Pure lexicographic comparison with x_1 > x_2 > ... > x_n.
/// Returns +1 if a >_lex b, -1 if a <_lex b, 0 if equal.
int lex_cmp(const Monomial& a, const Monomial& b);

/// Reverse-lexicographic comparison for equal-degree monomials: a <_revlex b
/// iff at the largest index where they differ, a has the larger exponent.
/// Returns +1 if a >_revlex b, -1 if a <_revlex b, 0 if equal.
int revlex_cmp(const Monomial& a, const Monomial& b);

inline bool lex_greater(const Monomial& a, const Monomial& b) {
  return lex_cmp(a, b) > 0;
}
inline bool revlex_less(const Monomial& a, const Monomial& b) {
  return revlex_cmp(a, b) < 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

} // namespace epow
