#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zslen/options.hpp"

namespace zslen {

/// Position of an element in the group's lexicographic enumeration.
using ElementId = std::uint32_t;

class GroupElement;

/// A finite abelian group C_{n1} + ... + C_{nr} in invariant-factor form,
/// 1 < n1 | n2 | ... | nr. Copies share one immutable table of the group
/// law, so the type is cheap to pass by value and safe to share across
/// threads. Elements are numbered lexicographically on their coordinate
/// tuples (last coordinate fastest); element 0 is the identity.
class FiniteAbelianGroup {
 public:
  /// The trivial group.
  FiniteAbelianGroup();

  std::span<const std::int64_t> invariant_factors() const noexcept;
  std::int64_t order() const noexcept;
  std::size_t rank() const noexcept;
  /// Largest invariant factor (1 for the trivial group).
  std::int64_t exponent() const noexcept;
  bool is_cyclic() const noexcept { return rank() <= 1; }

  ElementId add(ElementId a, ElementId b) const noexcept;
  ElementId neg(ElementId a) const noexcept;
  std::int64_t order_of(ElementId a) const noexcept;
  std::span<const std::int64_t> coords(ElementId a) const noexcept;
  /// Index of the element with the given coordinates; coordinates are reduced.
  ElementId index_of(std::span<const std::int64_t> coords) const;

  GroupElement zero() const;
  GroupElement element(std::span<const std::int64_t> coords) const;
  GroupElement element(std::initializer_list<std::int64_t> coords) const;
  GroupElement element_at(ElementId id) const;

  /// Rank-one groups print bare residues ("2"); others print tuples ("(1,0)").
  std::string element_to_string(ElementId a) const;
  /// Comma list of invariant factors, e.g. "3,3"; "1" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) noexcept;

 private:
  struct Tables;
  static std::shared_ptr<const Tables> trivial_tables();
  explicit FiniteAbelianGroup(std::shared_ptr<const Tables> tables);
  friend FiniteAbelianGroup make_group(std::span<const std::int64_t>, std::int64_t);

  std::shared_ptr<const Tables> tables_;
};

/// An element tied to its group.
class GroupElement {
 public:
  GroupElement(FiniteAbelianGroup group, ElementId id) : group_(std::move(group)), id_(id) {}

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  ElementId id() const noexcept { return id_; }
  std::vector<std::int64_t> coords() const;
  std::string to_string() const { return group_.element_to_string(id_); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) noexcept {
    return a.id_ == b.id_ && a.group_ == b.group_;
  }

 private:
  FiniteAbelianGroup group_;
  ElementId id_;
};

/// Canonical invariant-factor form of the direct sum of cyclic groups with
/// the given moduli. Throws InvalidArgument for a modulus below 1 and
/// ResourceLimit when the order exceeds `max_order`.
FiniteAbelianGroup make_group(std::span<const std::int64_t> moduli,
                              std::int64_t max_order = kDefaultMaxGroupOrder);
FiniteAbelianGroup make_group(std::initializer_list<std::int64_t> moduli,
                              std::int64_t max_order = kDefaultMaxGroupOrder);
/// Parses a comma list of moduli such as "3,3".
FiniteAbelianGroup parse_group(std::string_view text, std::int64_t max_order = kDefaultMaxGroupOrder);

GroupElement add(const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupElement& a);
GroupElement zero(const FiniteAbelianGroup& group);
std::int64_t order_of(const GroupElement& g);
std::vector<GroupElement> elements(const FiniteAbelianGroup& group);

std::vector<ElementId> all_elements(const FiniteAbelianGroup& group);
std::vector<ElementId> nonzero_elements(const FiniteAbelianGroup& group);
/// Parses one element: a bare residue for rank one or a tuple "(a,b,...)",
/// each coordinate in [0, n_i).
ElementId parse_element(const FiniteAbelianGroup& group, std::string_view text);

}  // namespace zslen
