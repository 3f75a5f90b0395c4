#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "zslen/group.hpp"
#include "zslen/invariants.hpp"
#include "zslen/length_set.hpp"
#include "zslen/options.hpp"
#include "zslen/rational.hpp"

namespace zslen {

/// L = y + (L' u L* u L'') inside y + D + dZ, where L* = [0, max L*] n (D + dZ),
/// L' lies in [-M, -1] and L'' in max L* + [1, M].
struct AAMPFit {
  std::int64_t shift = 0;                 // y
  std::int64_t difference = 1;            // d
  std::vector<std::int64_t> period;       // D, sorted, {0, d} inside, within [0, d]
  std::int64_t length = 0;                // largest l with l d in L*
  std::int64_t bound = 0;                 // M
  std::vector<std::int64_t> initial;      // L'
  std::vector<std::int64_t> central;      // L*
  std::vector<std::int64_t> end;          // L''
  bool degenerate = false;                // L* too short to contain d, so l = 0

  LengthSet reconstruct() const;
};

/// Best decomposition of L for a fixed difference and period: minimal M,
/// then maximal l, then minimal y. None if L leaves y + D + dZ for every y.
/// Throws InvalidArgument unless d >= 1 and {0, d} is inside D inside [0, d].
std::optional<AAMPFit> fit_aamp(const LengthSet& l, std::int64_t d, std::span<const std::int64_t> period);

/// Best fit over the candidate differences. For each d and each shift y the
/// period is the smallest admissible one, {0, d} plus the residues of L - y
/// modulo d; any larger period only adds points L* must cover. Ties are
/// broken by M, then d, then |D|, then larger l, then y.
AAMPFit best_aamp(const LengthSet& l, std::span<const std::int64_t> candidate_differences);

struct FitRecord {
  LengthSetEntry entry;
  AAMPFit fit;
};

struct StructureReport {
  FiniteAbelianGroup group;
  std::uint64_t bound = 0;
  std::vector<std::int64_t> differences;  // Delta accumulated over the system; {1} if empty
  std::vector<FitRecord> fits;
  std::int64_t max_bound = 0;
  std::size_t witness = 0;  // index into fits attaining max_bound
  std::map<std::tuple<std::int64_t, std::size_t, std::int64_t>, std::uint64_t> histogram;  // (d, |D|, M)
};

/// Fits every set of the system up to `bound` with differences from the
/// accumulated distance set and reports the largest bound M needed.
StructureReport verify_structure_theorem(const FiniteAbelianGroup& group, std::uint64_t bound,
                                         const Options& options = {});

struct UnionStructureRow {
  std::int64_t k = 0;
  std::int64_t lambda_k = 0;
  std::int64_t rho_k = 0;
  std::size_t size = 0;
  bool interval = false;
  std::int64_t aap_bound = 0;  // M of the AAP fit with difference min Delta(G)
  Rational density;            // |U_k| / k
};

struct UnionsStructureReport {
  FiniteAbelianGroup group;
  std::int64_t kmax = 0;
  std::int64_t difference = 1;  // min Delta(G), 1 when no distance was seen
  std::vector<std::int64_t> distances;
  Rational elasticity;
  double density_limit = 0.0;  // (rho - 1/rho) / d
  std::vector<UnionStructureRow> rows;
  bool all_intervals = true;
  std::int64_t max_aap_bound = 0;
  // Trend check on even k >= trend_start: every |U_k|/k within tolerance of the limit.
  std::int64_t trend_start = 10;
  double tolerance = 0.1;
  bool trend_checked = false;
  double tail_max_deviation = 0.0;
  bool trend_ok = true;

  bool ok() const { return all_intervals && max_aap_bound == 0 && trend_ok; }
};

UnionsStructureReport verify_unions_structure(const FiniteAbelianGroup& group, std::int64_t kmax,
                                              const Options& options = {}, std::int64_t trend_start = 10,
                                              double tolerance = 0.1);

}  // namespace zslen
