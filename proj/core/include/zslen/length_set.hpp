#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "zslen/rational.hpp"

namespace zslen {

/// A finite nonempty set of nonnegative integers, kept sorted.
class LengthSet {
 public:
  LengthSet() : values_{0} {}
  LengthSet(std::initializer_list<std::int64_t> values);
  explicit LengthSet(std::vector<std::int64_t> values);

  std::span<const std::int64_t> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::int64_t min() const noexcept { return values_.front(); }
  std::int64_t max() const noexcept { return values_.back(); }
  bool contains(std::int64_t v) const noexcept;
  bool is_interval() const noexcept { return max() - min() + 1 == static_cast<std::int64_t>(size()); }

  /// "{2,3,4}"
  std::string to_string() const;

  friend bool operator==(const LengthSet&, const LengthSet&) = default;
  friend auto operator<=>(const LengthSet&, const LengthSet&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// Set of successive gaps; empty iff |L| <= 1.
std::vector<std::int64_t> delta_of(const LengthSet& l);
/// max L / min L, with rho({0}) = 1. A set with min 0 and max > 0 has
/// unbounded elasticity and is rejected.
Rational elasticity_of(const LengthSet& l);
LengthSet sumset(const LengthSet& a, const LengthSet& b);
/// m + L; throws InvalidArgument if the result would contain a negative value.
LengthSet shift(const LengthSet& l, std::int64_t m);
/// k . L = {k a | a in L}, k >= 0.
LengthSet dilate(std::int64_t k, const LengthSet& l);

}  // namespace zslen
