#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zslen/atoms.hpp"
#include "zslen/length_set.hpp"
#include "zslen/options.hpp"
#include "zslen/rational.hpp"
#include "zslen/sequence.hpp"

namespace zslen {

struct LengthSetEntry {
  LengthSet lengths;
  Sequence witness;  // shortest (then canonically first) B with L(B) = lengths
};

/// { L(B) : B in B(G0), |B| <= bound }, each set with a witness.
struct SystemOfLengthSets {
  FiniteAbelianGroup group;
  std::vector<ElementId> subset;
  std::uint64_t bound = 0;
  std::vector<LengthSetEntry> entries;  // sorted by length set
  std::uint64_t sequences_scanned = 0;
  std::uint64_t davenport = 0;  // longest atom over the subset

  bool contains(const LengthSet& l) const;
  std::vector<LengthSet> sets() const;
};

SystemOfLengthSets system_of_length_sets(const FiniteAbelianGroup& group, std::span<const ElementId> subset,
                                         std::uint64_t bound, const Options& options = {});
SystemOfLengthSets system_of_length_sets(const FiniteAbelianGroup& group, std::uint64_t bound,
                                         const Options& options = {});

/// Groups whose full system of length sets has a known parametrization.
bool has_closed_form_system(const FiniteAbelianGroup& group);
/// Every set of the known parametrization for C3, C2+C2, C4, C2^3 or C3^2
/// whose maximum is at most `max_element`, deduplicated and sorted.
std::vector<LengthSet> closed_form_system(const FiniteAbelianGroup& group, std::int64_t max_element);

/// Result of comparing a computed system against the closed form. Sound:
/// every computed set belongs to the closed form. Complete: every closed
/// form set L with D(G) * min L <= bound was computed (any B realizing L has
/// |B| <= D(G) * min L, so these are exactly the sets the scan must reach).
struct ClosedFormComparison {
  bool sound = true;
  bool complete = true;
  std::vector<LengthSetEntry> unexpected;  // computed, not in closed form
  std::vector<LengthSet> missing;          // in closed form within frontier, not computed
  std::size_t compared = 0;                // closed-form sets inside the frontier
  bool ok() const { return sound && complete; }
};
ClosedFormComparison compare_with_closed_form(const SystemOfLengthSets& computed);

/// The computed sets L with D * min L <= bound: the part of the system that
/// is complete at this bound.
std::vector<LengthSet> complete_part(const SystemOfLengthSets& computed);

/// U_k(G0) with rho_k = max and lambda_k = min, plus one witness product of
/// k atoms for every value.
struct UnionOfLengths {
  std::int64_t k = 0;
  std::vector<std::int64_t> values;
  std::int64_t rho_k = 0;
  std::int64_t lambda_k = 0;
  std::vector<std::pair<std::int64_t, Sequence>> witnesses;
  std::uint64_t products = 0;  // distinct products of k atoms

  bool is_interval() const {
    return !values.empty() && values.back() - values.front() + 1 == static_cast<std::int64_t>(values.size());
  }
};

struct UnionsComputation {
  std::vector<UnionOfLengths> unions;   // k = 1 .. kmax
  std::vector<std::int64_t> distances;  // union of Delta(L) over every set computed on the way
};

/// U_1 .. U_kmax over G0, built level by level from the deduplicated
/// products of k atoms.
UnionsComputation unions_up_to(const FiniteAbelianGroup& group, std::span<const ElementId> subset, std::int64_t kmax,
                               const Options& options = {});
UnionOfLengths union_k(const FiniteAbelianGroup& group, std::int64_t k, const Options& options = {});
std::int64_t rho_k(const FiniteAbelianGroup& group, std::int64_t k, const Options& options = {});
std::int64_t lambda_k(const FiniteAbelianGroup& group, std::int64_t k, const Options& options = {});

struct ElasticityResult {
  Rational value;
  bool cross_checked = false;       // brute force agrees with the closed form
  std::optional<Sequence> witness;  // (-U)U with |U| = D(G), when |G| >= 3
  std::optional<LengthSet> witness_lengths;
};
/// rho(G) = D(G)/2 for |G| >= 3 and 1 otherwise, cross-checked on (-U)U.
ElasticityResult elasticity(const FiniteAbelianGroup& group, const Options& options = {});

struct DeltaResult {
  std::vector<std::int64_t> distances;
  std::vector<std::pair<std::int64_t, Sequence>> witnesses;  // shortest witness per distance
  /// Heuristic confidence flag: G0 = G, the distances form [1, max], and
  /// max already appeared at bound - D(G). Not a proof of exactness.
  bool stable = false;
  std::uint64_t bound = 0;
};
DeltaResult delta_of_group(const SystemOfLengthSets& system);
DeltaResult delta_of_group(const FiniteAbelianGroup& group, std::span<const ElementId> subset, std::uint64_t bound,
                           const Options& options = {});

struct DeltaStarResult {
  std::vector<std::int64_t> values;                                     // min Delta(G0) values found
  std::vector<std::pair<std::int64_t, std::vector<ElementId>>> witnesses;  // first subset per value
  std::uint64_t subsets_with_distances = 0;
  std::uint64_t bound = 0;
};
/// Approximates Delta*(G) = { min Delta(G0) : Delta(G0) nonempty } by
/// scanning zero-sum sequences over G \ {0} up to `bound` and estimating
/// min Delta(G0) as the gcd of distances seen on sequences supported in G0.
DeltaStarResult delta_star(const FiniteAbelianGroup& group, std::uint64_t bound, const Options& options = {});

enum class HalfFactorialKind { kYesExact, kNo, kYesUpToBound };

struct HalfFactorialVerdict {
  HalfFactorialKind kind;
  std::optional<Sequence> witness;  // element with |L| > 1
  std::optional<LengthSet> witness_lengths;
  std::string relation;  // e.g. "(-U)U = V^3"
};
HalfFactorialVerdict is_half_factorial(const FiniteAbelianGroup& group, std::span<const ElementId> subset,
                                       std::uint64_t bound, const Options& options = {});

struct TwoDResult {
  bool found = false;
  bool in_scope = false;  // D(G) >= 4
  std::uint64_t davenport = 0;
  std::optional<Sequence> witness;
  std::uint64_t pairs_scanned = 0;  // pairs factorized
  std::uint64_t pairs_total = 0;    // all unordered atom pairs, including those ruled out by length
};
/// Searches for a product of two atoms with length set exactly {2, D(G)}.
/// Only pairs with |U| + |V| >= 2 D(G) can reach length D(G) (a factorization
/// without the atom 0 has at most |UV|/2 atoms), so the others are ruled
/// out without factorizing; the scan is otherwise exhaustive.
TwoDResult has_two_D_lengthset(const FiniteAbelianGroup& group, const Options& options = {});

struct IntervalSupportReport {
  std::uint64_t samples = 0;
  std::uint64_t passes = 0;
  std::uint64_t seed = 0;
  std::optional<Sequence> counterexample;
  std::optional<LengthSet> counterexample_lengths;
  bool ok() const { return passes == samples; }
};
/// Samples zero-sum A whose support together with 0 is a subgroup and checks
/// that L(A) is an interval.
IntervalSupportReport interval_support_check(const FiniteAbelianGroup& group, std::uint64_t samples,
                                             std::uint64_t seed, std::uint64_t max_length = 16,
                                             const Options& options = {});

/// All subgroups of G, each as a sorted element list.
std::vector<std::vector<ElementId>> subgroups(const FiniteAbelianGroup& group);

/// L(B) using only the atoms over supp(B); B(supp B) is divisor-closed in
/// B(G), so this equals L(B) over any G0 containing the support.
LengthSet length_set_in_support(const Sequence& b, const Options& options = {});

}  // namespace zslen
