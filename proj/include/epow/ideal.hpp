#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "epow/monomial.hpp"

namespace epow {

/// A monomial prime ideal, identified by the set of variable indices that
/// generate it. The empty set stands for "no prime".
struct PrimeSupport {
  std::vector<int> vars; // sorted ascending, 1-based

  static PrimeSupport of(std::vector<int> vars, int n);
  static PrimeSupport full(int n);

  bool empty() const { return vars.empty(); }
  std::size_t size() const { return vars.size(); }
  std::uint64_t mask() const;
  bool contains(int var) const;

  auto operator<=>(const PrimeSupport&) const = default;
};

/// A monomial ideal, held by its minimal monomial generators.
/// Generators are kept in decreasing lexicographic order; no generator
/// divides another. The zero ideal has no generators.
class MonomialIdeal {
public:
  explicit MonomialIdeal(int n); // zero ideal

  static MonomialIdeal zero(int n);
  static MonomialIdeal unit(int n);
  /// Minimalizes: keeps the inclusion-minimal antichain under divisibility.
  static MonomialIdeal from_gens(int n, std::vector<Monomial> gens);

  int ambient() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t num_gens() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  bool contains(const Monomial& m) const;
  /// true iff every generator of `other` lies in this ideal.
  bool contains_ideal(const MonomialIdeal& other) const;

  MonomialIdeal times(const MonomialIdeal& other) const;
  MonomialIdeal power(int k) const;
  MonomialIdeal colon(const Monomial& f) const;
  MonomialIdeal colon(const MonomialIdeal& j) const;
  MonomialIdeal intersect(const MonomialIdeal& other) const;
  /// Sets x_j := 1 for every j outside `keep`, then minimalizes.
  MonomialIdeal localize(const PrimeSupport& keep) const;

  /// lcm of all minimal generators; ArgumentError on the zero ideal.
  Monomial lcm_of_gens() const;
  /// Common degree of the generators, or -1 if mixed / zero ideal.
  int common_degree() const;

  bool operator==(const MonomialIdeal&) const = default;

private:
  int n_;
  std::vector<Monomial> gens_;
};

/// The prime ideal (x_i : i in support) inside K[x_1..x_n].
MonomialIdeal prime_ideal(const PrimeSupport& support, int n);

} // namespace epow
