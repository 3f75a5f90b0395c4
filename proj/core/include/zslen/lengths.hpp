#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "zslen/atoms.hpp"
#include "zslen/length_set.hpp"
#include "zslen/options.hpp"
#include "zslen/sequence.hpp"

namespace zslen {

/// Factorization engine over a fixed finite atom list in a lattice N_0^n.
///
/// L(B) is computed top-down as the union over atoms A | B of 1 + L(B/A),
/// memoized on the exponent vector of B. Only atoms that contain the first
/// letter in the support of B (the pivot) are tried: every factorization
/// has an atom covering that letter, so no length is lost and reorderings
/// of the same factorization are never revisited.
///
/// Not thread-safe; use one engine per worker.
class LengthEngine {
 public:
  LengthEngine(std::size_t letters, std::vector<ExponentVector> atoms, const Options& options = {});
  explicit LengthEngine(const AtomSet& atoms, const Options& options = {});
  ~LengthEngine();
  LengthEngine(LengthEngine&&) noexcept;
  LengthEngine& operator=(LengthEngine&&) noexcept;

  /// L(b) for an exponent vector over the engine's letters. Throws
  /// InvalidArgument if b has no factorization over the atoms.
  LengthSet lengths(std::span<const Multiplicity> b);
  /// L(B) for a sequence over the subset of the AtomSet this engine was
  /// built from. B must be zero-sum with support inside the subset.
  LengthSet length_set(const Sequence& b);

  std::size_t letters() const noexcept;
  std::span<const ExponentVector> atoms() const noexcept;
  std::size_t memo_size() const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-shot L(B) over the given atoms.
LengthSet length_set(const Sequence& b, const AtomSet& atoms, const Options& options = {});

}  // namespace zslen
