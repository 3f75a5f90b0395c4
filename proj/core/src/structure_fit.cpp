#include "zslen/structure_fit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "zslen/errors.hpp"

namespace zslen {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t d) {
  const auto r = a % d;
  return r < 0 ? r + d : r;
}

// Fit with a fixed shift y. `residues[r]` marks the residues of D modulo d.
std::optional<AAMPFit> fit_at(const LengthSet& l, std::int64_t y, std::int64_t d,
                              const std::vector<bool>& residues, std::span<const std::int64_t> period) {
  for (const auto x : l.values())
    if (!residues[mod(x - y, d)]) return std::nullopt;
  // Walk the points of D + dZ upward from 0 while they stay in L - y.
  std::int64_t t = 0;
  for (std::int64_t p = 1; y + p <= l.max(); ++p) {
    if (!residues[mod(p, d)]) continue;
    if (!l.contains(y + p)) break;
    t = p;
  }
  AAMPFit fit;
  fit.shift = y;
  fit.difference = d;
  fit.period.assign(period.begin(), period.end());
  for (const auto x : l.values()) {
    const auto v = x - y;
    if (v < 0)
      fit.initial.push_back(v);
    else if (v <= t)
      fit.central.push_back(v);
    else
      fit.end.push_back(v);
  }
  fit.bound = std::max<std::int64_t>(y - l.min(), l.max() - y - t);
  fit.length = t / d;
  fit.degenerate = fit.length == 0;
  return fit;
}

// Lexicographic preference (M, then larger l, then y) within one period.
bool better_within(const AAMPFit& a, const AAMPFit& b) {
  if (a.bound != b.bound) return a.bound < b.bound;
  if (a.length != b.length) return a.length > b.length;
  return a.shift < b.shift;
}

bool better_overall(const AAMPFit& a, const AAMPFit& b) {
  if (a.bound != b.bound) return a.bound < b.bound;
  if (a.difference != b.difference) return a.difference < b.difference;
  if (a.period.size() != b.period.size()) return a.period.size() < b.period.size();
  if (a.length != b.length) return a.length > b.length;
  return a.shift < b.shift;
}

}  // namespace

LengthSet AAMPFit::reconstruct() const {
  std::vector<std::int64_t> v;
  for (const auto* part : {&initial, &central, &end})
    for (const auto x : *part) v.push_back(shift + x);
  std::sort(v.begin(), v.end());
  return LengthSet(std::move(v));
}

std::optional<AAMPFit> fit_aamp(const LengthSet& l, std::int64_t d, std::span<const std::int64_t> period) {
  if (d < 1) throw InvalidArgument("difference must be positive");
  std::set<std::int64_t> p(period.begin(), period.end());
  if (!p.contains(0) || !p.contains(d) || *p.begin() < 0 || *p.rbegin() > d)
    throw InvalidArgument("period must contain 0 and d and lie in [0, d]");
  std::vector<bool> residues(static_cast<std::size_t>(d), false);
  for (const auto x : p) residues[mod(x, d)] = true;
  const std::vector<std::int64_t> sorted(p.begin(), p.end());
  std::optional<AAMPFit> best;
  for (const auto y : l.values()) {
    auto fit = fit_at(l, y, d, residues, sorted);
    if (fit && (!best || better_within(*fit, *best))) best = std::move(fit);
  }
  return best;
}

AAMPFit best_aamp(const LengthSet& l, std::span<const std::int64_t> candidate_differences) {
  if (candidate_differences.empty()) throw InvalidArgument("no candidate differences");
  std::optional<AAMPFit> best;
  for (const auto d : candidate_differences) {
    if (d < 1) throw InvalidArgument("difference must be positive");
    for (const auto y : l.values()) {
      std::vector<bool> residues(static_cast<std::size_t>(d), false);
      residues[0] = true;
      for (const auto x : l.values()) residues[mod(x - y, d)] = true;
      std::vector<std::int64_t> period{0};
      for (std::int64_t r = 1; r < d; ++r)
        if (residues[r]) period.push_back(r);
      period.push_back(d);
      if (d == 1) period = {0, 1};
      auto fit = fit_at(l, y, d, residues, period);
      if (fit && (!best || better_overall(*fit, *best))) best = std::move(fit);
    }
  }
  return *best;
}

StructureReport verify_structure_theorem(const FiniteAbelianGroup& group, std::uint64_t bound,
                                         const Options& options) {
  const auto system = system_of_length_sets(group, bound, options);
  StructureReport r;
  r.group = group;
  r.bound = bound;
  r.differences = delta_of_group(system).distances;
  if (r.differences.empty()) r.differences = {1};
  for (const auto& e : system.entries) {
    auto fit = best_aamp(e.lengths, r.differences);
    ++r.histogram[{fit.difference, fit.period.size(), fit.bound}];
    if (r.fits.empty() || fit.bound > r.max_bound) {
      r.witness = r.fits.size();
      r.max_bound = fit.bound;
    }
    r.fits.push_back({e, std::move(fit)});
  }
  return r;
}

UnionsStructureReport verify_unions_structure(const FiniteAbelianGroup& group, std::int64_t kmax,
                                              const Options& options, std::int64_t trend_start, double tolerance) {
  const auto computed = unions_up_to(group, all_elements(group), kmax, options);
  UnionsStructureReport r;
  r.group = group;
  r.kmax = kmax;
  r.distances = computed.distances;
  r.difference = r.distances.empty() ? 1 : r.distances.front();
  r.elasticity = elasticity(group, options).value;
  const double rho = r.elasticity.to_double();
  r.density_limit = (rho - 1.0 / rho) / static_cast<double>(r.difference);
  r.trend_start = trend_start;
  r.tolerance = tolerance;
  const std::vector<std::int64_t> aap{0, r.difference};
  for (const auto& u : computed.unions) {
    UnionStructureRow row;
    row.k = u.k;
    row.lambda_k = u.lambda_k;
    row.rho_k = u.rho_k;
    row.size = u.values.size();
    row.interval = u.is_interval();
    const auto fit = fit_aamp(LengthSet(u.values), r.difference, aap);
    row.aap_bound = fit ? fit->bound : u.rho_k - u.lambda_k;
    row.density = Rational(static_cast<std::int64_t>(row.size), u.k);
    r.all_intervals = r.all_intervals && row.interval;
    r.max_aap_bound = std::max(r.max_aap_bound, row.aap_bound);
    if (u.k % 2 == 0 && u.k >= trend_start) {
      r.trend_checked = true;
      r.tail_max_deviation =
          std::max(r.tail_max_deviation, std::abs(row.density.to_double() - r.density_limit));
    }
    r.rows.push_back(row);
  }
  r.trend_ok = r.tail_max_deviation <= tolerance;
  return r;
}

}  // namespace zslen
