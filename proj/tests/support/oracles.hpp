#pragma once

// Brute-force reference implementations. They share only the group law with
// the library and search exhaustively, so they are slow but easy to trust.

#include <cstdint>
#include <set>
#include <vector>

#include "zslen/group.hpp"
#include "zslen/length_set.hpp"

namespace zslen::oracle {

using Counts = std::vector<std::uint32_t>;  // multiplicity per alphabet position

/// Every zero-sum multiset over `alphabet` with at most max_length terms.
std::vector<Counts> zero_sum_multisets(const FiniteAbelianGroup& g, const std::vector<ElementId>& alphabet,
                                       std::uint32_t max_length);

/// True iff some proper nonempty sub-multiset sums to zero (full scan of the
/// sub-multiset box).
bool has_proper_zero_sum(const FiniteAbelianGroup& g, const std::vector<ElementId>& alphabet, const Counts& c);

/// Minimal zero-sum multisets. Uses v_g(A) <= ord(g) for every atom A and
/// scans the whole box, testing minimality with has_proper_zero_sum.
std::set<Counts> atoms(const FiniteAbelianGroup& g, const std::vector<ElementId>& alphabet);

/// Lengths of all ordered factorizations of b into the given atoms, found by
/// trying every dividing atom at every step (no pivot, no memo).
std::set<std::int64_t> factorization_lengths(const Counts& b, const std::vector<Counts>& atoms);

/// { sum k_i : sum k_i n_i = n } by enumerating every coefficient tuple.
std::set<std::int64_t> numerical_lengths(const std::vector<std::int64_t>& gens, std::int64_t n);

/// Largest integer not representable, scanning up to n1 * nt.
std::int64_t frobenius(const std::vector<std::int64_t>& gens);

}  // namespace zslen::oracle
