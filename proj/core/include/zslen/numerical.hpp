#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zslen/length_set.hpp"
#include "zslen/rational.hpp"

namespace zslen {

/// A numerical monoid <n1, ..., nt> given by its minimal generators.
class NumericalMonoid {
 public:
  std::span<const std::int64_t> generators() const noexcept { return generators_; }
  /// Largest integer outside the monoid, -1 for N0.
  std::int64_t frobenius() const noexcept { return frobenius_; }
  /// Ap(H, n1): smallest member in each residue class modulo n1.
  std::span<const std::int64_t> apery() const noexcept { return apery_; }

 private:
  friend NumericalMonoid make_numerical(std::span<const std::int64_t>);
  std::vector<std::int64_t> generators_;
  std::vector<std::int64_t> apery_;
  std::int64_t frobenius_ = -1;
};

/// Drops generators that are N0-combinations of the others. Throws
/// InvalidArgument for an empty list, a nonpositive entry or gcd != 1.
NumericalMonoid make_numerical(std::span<const std::int64_t> raw_generators);
NumericalMonoid make_numerical(std::initializer_list<std::int64_t> raw_generators);

bool contains(const NumericalMonoid& h, std::int64_t n);

/// { k1 + ... + kt : sum ki ni = n }. Throws InvalidArgument if n is not in H.
LengthSet num_length_set(const NumericalMonoid& h, std::int64_t n);
/// Length sets of every n in [0, max_n] (empty optional for non-members),
/// sharing one table.
std::vector<std::optional<LengthSet>> num_length_sets(const NumericalMonoid& h, std::int64_t max_n);

/// nt / n1
Rational num_elasticity(const NumericalMonoid& h);
/// gcd of consecutive generator differences; none when H = N0.
std::optional<std::int64_t> num_min_delta(const NumericalMonoid& h);

}  // namespace zslen
