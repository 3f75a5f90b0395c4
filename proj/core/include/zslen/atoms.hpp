#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zslen/group.hpp"
#include "zslen/options.hpp"
#include "zslen/sequence.hpp"

namespace zslen {

/// The minimal zero-sum sequences over a subset G0 of a group, in canonical
/// sequence order. Immutable after construction.
class AtomSet {
 public:
  AtomSet(FiniteAbelianGroup group, std::vector<ElementId> subset, std::vector<Sequence> atoms);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  /// Sorted element ids of G0.
  std::span<const ElementId> subset() const noexcept { return subset_; }
  std::span<const Sequence> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  /// Longest atom length (0 for an empty set).
  std::uint64_t max_length() const noexcept;
  bool contains(const Sequence& s) const;
  /// Atoms as exponent vectors over subset().
  std::vector<ExponentVector> dense() const;

  friend bool operator==(const AtomSet&, const AtomSet&) = default;

 private:
  FiniteAbelianGroup group_;
  std::vector<ElementId> subset_;
  std::vector<Sequence> atoms_;
};

/// Exact test for minimality: s is nonempty, zero-sum, and no proper nonempty
/// subsequence sums to zero. Searches the sub-lattice below s, stopping at
/// the first proper zero-sum divisor.
bool is_atom(const Sequence& s);

/// Minimal zero-sum words over an alphabet whose letters carry group
/// classes (letters may share a class). Each result is an exponent vector
/// over the letters. The search walks zero-sum-free words in
/// nondecreasing letter order, so every minimal word is produced once, as
/// a zero-sum-free prefix closed by its last letter. `nodes` (optional)
/// receives the number of search nodes visited.
std::vector<ExponentVector> minimal_zero_sum_words(const FiniteAbelianGroup& group,
                                                   std::span<const ElementId> letter_classes,
                                                   const Options& options = {},
                                                   std::uint64_t* nodes = nullptr);

/// A(G0). Throws InvalidArgument for an empty subset and ResourceLimit when
/// the search exceeds options.node_limit.
AtomSet enumerate_atoms(const FiniteAbelianGroup& group, std::span<const ElementId> subset,
                        const Options& options = {});
/// A(G).
AtomSet enumerate_atoms(const FiniteAbelianGroup& group, const Options& options = {});

struct DavenportResult {
  std::uint64_t value;
  Sequence witness;
};

/// D(G) = max length of an atom over G, with the first such atom in
/// canonical order as witness.
DavenportResult davenport(const FiniteAbelianGroup& group, const Options& options = {});
DavenportResult davenport(const AtomSet& atoms_over_group);
/// D*(G) = 1 + sum(n_i - 1).
std::uint64_t davenport_star(const FiniteAbelianGroup& group);
/// (e_1 + ... + e_r) * prod e_i^{n_i - 1}, an atom of length D*(G).
Sequence davenport_star_witness(const FiniteAbelianGroup& group);

}  // namespace zslen
