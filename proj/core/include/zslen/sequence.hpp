#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zslen/group.hpp"

namespace zslen {

using Multiplicity = std::uint32_t;
/// Dense exponent vector over an ordered alphabet (group elements of a
/// subset, or primes of a Krull instance).
using ExponentVector = std::vector<Multiplicity>;

/// A finite multiset of group elements, i.e. an element of the free abelian
/// monoid over the group. Stored sparsely as (element, multiplicity) pairs
/// sorted by element id, all multiplicities positive.
class Sequence {
 public:
  using Term = std::pair<ElementId, Multiplicity>;

  explicit Sequence(FiniteAbelianGroup group) : group_(std::move(group)) {}
  /// Terms may repeat and be unsorted; zero multiplicities are dropped.
  Sequence(FiniteAbelianGroup group, std::vector<Term> terms);
  /// g^mult
  static Sequence power_of(const GroupElement& g, Multiplicity mult);
  /// Builds from a dense exponent vector over `alphabet`.
  static Sequence from_exponents(const FiniteAbelianGroup& group, std::span<const ElementId> alphabet,
                                 std::span<const Multiplicity> exponents);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::uint64_t length() const noexcept;
  Multiplicity multiplicity(ElementId g) const noexcept;
  std::vector<ElementId> support() const;

  GroupElement sigma() const;
  bool is_zero_sum() const { return sigma().id() == 0; }
  Sequence negate() const;
  /// S^k
  Sequence power(Multiplicity k) const;
  /// Dense exponent vector over `alphabet`; throws if the support leaves it.
  ExponentVector exponents(std::span<const ElementId> alphabet) const;

  /// "[g:mult,...]" with elements in group order.
  std::string to_string() const;

  friend bool operator==(const Sequence& a, const Sequence& b) noexcept {
    return a.terms_ == b.terms_ && a.group_ == b.group_;
  }
  /// Canonical order: length first, then the dense exponent vector over the
  /// group's element order, lexicographically.
  friend std::strong_ordering operator<=>(const Sequence& a, const Sequence& b) noexcept;

 private:
  FiniteAbelianGroup group_;
  std::vector<Term> terms_;
};

GroupElement sigma(const Sequence& s);
bool is_zero_sum(const Sequence& s);
Sequence negate(const Sequence& s);
/// Multiset union ST; throws InvalidArgument on group mismatch or overflow.
Sequence mul(const Sequence& s, const Sequence& t);
/// True iff v_g(t) <= v_g(s) for every g.
bool divides(const Sequence& t, const Sequence& s);
/// s t^{-1}; throws InvalidArgument unless divides(t, s).
Sequence quotient(const Sequence& s, const Sequence& t);

/// Parses "[g:mult, ...]" (":mult" optional, default 1).
Sequence parse_sequence(const FiniteAbelianGroup& group, std::string_view text);

/// Visits every zero-sum sequence over `subset` with length <= max_length
/// exactly once, ordered by length and then by exponent vector over the
/// subset (lexicographic). The visitor receives the dense exponent vector.
void for_each_zero_sum(const FiniteAbelianGroup& group, std::span<const ElementId> subset,
                       std::uint64_t max_length, const std::function<void(const ExponentVector&)>& visit);
std::vector<Sequence> enumerate_zero_sum(const FiniteAbelianGroup& group, std::span<const ElementId> subset,
                                         std::uint64_t max_length);

/// Sorted, deduplicated copy of a subset; throws if an id is out of range.
std::vector<ElementId> normalize_subset(const FiniteAbelianGroup& group, std::span<const ElementId> subset);

}  // namespace zslen
