#include <gtest/gtest.h>

#include <random>
#include <set>

#include "zslen/errors.hpp"
#include "zslen/structure_fit.hpp"

namespace zslen {
namespace {

struct Key {
  std::int64_t bound, length, shift;
};

// Every decomposition allowed by the definition for (d, D): any y in L with
// L inside y + D + dZ and any cut t such that all points of D + dZ in
// [0, t] lie in L - y. Returns the best (M, larger l, y).
std::optional<Key> fit_oracle(const LengthSet& l, std::int64_t d, const std::set<std::int64_t>& period) {
  auto on_grid = [&](std::int64_t v) {
    const auto r = ((v % d) + d) % d;
    for (const auto p : period)
      if (p % d == r) return true;
    return false;
  };
  std::optional<Key> best;
  for (const auto y : l.values()) {
    bool inside = true;
    for (const auto x : l.values()) inside = inside && on_grid(x - y);
    if (!inside) continue;
    for (std::int64_t t = 0; y + t <= l.max(); ++t) {
      if (!on_grid(t)) continue;
      bool covered = true;
      for (std::int64_t p = 0; p <= t; ++p)
        if (on_grid(p) && !l.contains(y + p)) covered = false;
      if (!covered) continue;
      const Key k{std::max(y - l.min(), l.max() - y - t), t / d, y};
      if (!best || k.bound < best->bound || (k.bound == best->bound && k.length > best->length) ||
          (k.bound == best->bound && k.length == best->length && k.shift < best->shift))
        best = k;
    }
  }
  return best;
}

LengthSet random_set(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n(1, 7), v(0, 14);
  std::vector<std::int64_t> out;
  for (int i = n(rng); i > 0; --i) out.push_back(v(rng));
  return LengthSet(out);
}

void check_decomposition(const LengthSet& l, const AAMPFit& f) {
  EXPECT_EQ(f.reconstruct(), l);
  for (const auto x : f.initial) {
    EXPECT_GE(x, -f.bound);
    EXPECT_LE(x, -1);
  }
  const auto top = f.central.empty() ? 0 : f.central.back();
  for (const auto x : f.end) {
    EXPECT_GE(x, top + 1);
    EXPECT_LE(x, top + f.bound);
  }
  ASSERT_FALSE(f.central.empty());
  EXPECT_EQ(f.central.front(), 0);
  EXPECT_EQ(f.degenerate, f.length == 0);
}

TEST(FitAamp, Examples) {
  const std::vector<std::int64_t> ap{0, 1};
  const auto f = fit_aamp(LengthSet{2, 3, 4, 5}, 1, ap);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->bound, 0);
  EXPECT_EQ(f->shift, 2);
  EXPECT_EQ(f->length, 3);

  // D + {0, d, ..., (n/d - 1)d} with n = 12, d = 4, D = {0, 1, 3, 4}.
  const std::vector<std::int64_t> period{0, 1, 3, 4};
  std::vector<std::int64_t> a;
  for (const auto p : period)
    for (std::int64_t j = 0; j < 3; ++j) a.push_back(p + 4 * j);
  const auto g = fit_aamp(LengthSet(a), 4, period);
  ASSERT_TRUE(g);
  EXPECT_EQ(g->bound, 0);

  const LengthSet odd{0, 5, 6, 13};
  const auto h = fit_aamp(odd, 1, ap);
  ASSERT_TRUE(h);
  EXPECT_LE(h->bound, odd.max() - odd.min());
  check_decomposition(odd, *h);

  const std::vector<std::int64_t> spec_period{0, 1, 5};
  const auto s = fit_aamp(LengthSet{2, 3, 7, 8}, 5, spec_period);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->bound, 0);
  EXPECT_EQ(s->shift, 2);
  EXPECT_EQ(s->length, 1);
}

TEST(FitAamp, NoneOffTheGrid) {
  const std::vector<std::int64_t> even{0, 2};
  EXPECT_FALSE(fit_aamp(LengthSet{0, 1, 2}, 2, even));
}

TEST(FitAamp, InvalidPeriod) {
  const std::vector<std::int64_t> no_d{0, 1}, no_zero{1, 3}, outside{0, 3, 5};
  EXPECT_THROW(fit_aamp(LengthSet{1}, 3, no_d), InvalidArgument);
  EXPECT_THROW(fit_aamp(LengthSet{1}, 3, no_zero), InvalidArgument);
  EXPECT_THROW(fit_aamp(LengthSet{1}, 3, outside), InvalidArgument);
  const std::vector<std::int64_t> p{0, 0};
  EXPECT_THROW(fit_aamp(LengthSet{1}, 0, p), InvalidArgument);
}

TEST(FitAamp, Degenerate) {
  const std::vector<std::int64_t> p{0, 3};
  const auto f = fit_aamp(LengthSet{4}, 3, p);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->bound, 0);
  EXPECT_EQ(f->length, 0);
  EXPECT_TRUE(f->degenerate);
}

TEST(FitAamp, MatchesExhaustiveDecompositions) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 400; ++i) {
    const auto l = random_set(rng);
    for (std::int64_t d = 1; d <= 4; ++d)
      for (std::uint32_t mask = 0; mask < (1u << (d - 1)); ++mask) {
        std::set<std::int64_t> period{0, d};
        for (std::int64_t r = 1; r < d; ++r)
          if (mask >> (r - 1) & 1) period.insert(r);
        const std::vector<std::int64_t> pv(period.begin(), period.end());
        const auto got = fit_aamp(l, d, pv);
        const auto want = fit_oracle(l, d, period);
        ASSERT_EQ(got.has_value(), want.has_value()) << l.to_string() << " d=" << d;
        if (!got) continue;
        EXPECT_EQ(got->bound, want->bound) << l.to_string() << " d=" << d;
        EXPECT_EQ(got->length, want->length) << l.to_string() << " d=" << d;
        EXPECT_EQ(got->shift, want->shift) << l.to_string() << " d=" << d;
        check_decomposition(l, *got);
      }
  }
}

TEST(BestAamp, Examples) {
  const std::vector<std::int64_t> one{1}, one_two{1, 2};
  for (std::int64_t k = 1; k <= 4; ++k) {
    std::vector<std::int64_t> v;
    for (std::int64_t j = 0; j <= k; ++j) v.push_back(2 * k + j);
    const auto f = best_aamp(LengthSet(v), one);
    EXPECT_EQ(f.difference, 1);
    EXPECT_EQ(f.bound, 0);
  }
  const auto even = best_aamp(LengthSet{4, 6, 8}, one_two);
  EXPECT_EQ(even.difference, 2);
  EXPECT_EQ(even.bound, 0);
  for (std::int64_t n = 4; n <= 9; ++n) {
    std::vector<std::int64_t> cands;
    for (std::int64_t d = 1; d <= n - 2; ++d) cands.push_back(d);
    const auto f = best_aamp(LengthSet{2, n}, cands);
    EXPECT_EQ(f.bound, 0);
    EXPECT_EQ(f.difference, n - 2);
  }
}

// Searching every period {0, d} u R, R among the residues 1..d-1, gives the
// same (M, d, |D|, l, y) as the minimal period per shift.
TEST(BestAamp, MatchesSearchOverAllPeriods) {
  std::mt19937_64 rng(11);
  const std::vector<std::int64_t> cands{1, 2, 3, 4};
  for (int i = 0; i < 300; ++i) {
    const auto l = random_set(rng);
    std::tuple<std::int64_t, std::int64_t, std::size_t, std::int64_t, std::int64_t> best{
        std::numeric_limits<std::int64_t>::max(), 0, 0, 0, 0};
    for (const auto d : cands)
      for (std::uint32_t mask = 0; mask < (1u << (d - 1)); ++mask) {
        std::set<std::int64_t> period{0, d};
        for (std::int64_t r = 1; r < d; ++r)
          if (mask >> (r - 1) & 1) period.insert(r);
        const auto k = fit_oracle(l, d, period);
        if (!k) continue;
        best = std::min(best, std::tuple{k->bound, d, period.size(), -k->length, k->shift});
      }
    const auto f = best_aamp(l, cands);
    EXPECT_EQ(f.bound, std::get<0>(best)) << l.to_string();
    EXPECT_EQ(f.difference, std::get<1>(best)) << l.to_string();
    EXPECT_EQ(f.period.size(), std::get<2>(best)) << l.to_string();
    EXPECT_EQ(f.length, -std::get<3>(best)) << l.to_string();
    EXPECT_EQ(f.shift, std::get<4>(best)) << l.to_string();
    check_decomposition(l, f);
  }
}

TEST(BestAamp, AddingCandidatesNeverRaisesBound) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto l = random_set(rng);
    std::int64_t prev = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> cands;
    for (std::int64_t d = 1; d <= 6; ++d) {
      cands.push_back(d);
      const auto m = best_aamp(l, cands).bound;
      EXPECT_LE(m, prev);
      EXPECT_LE(m, l.max() - l.min());
      prev = m;
    }
  }
}

TEST(VerifyStructure, ClosedFormGroupsNeedNoBound) {
  for (const auto& g : {make_group({3}), make_group({4}), make_group({2, 2}), make_group({2, 2, 2})}) {
    const auto r = verify_structure_theorem(g, 10);
    EXPECT_EQ(r.max_bound, 0) << g.to_string();
    EXPECT_FALSE(r.fits.empty());
    for (const auto& f : r.fits) {
      EXPECT_LE(f.fit.difference, 2);
      EXPECT_EQ(f.fit.reconstruct(), f.entry.lengths);
    }
    std::uint64_t total = 0;
    for (const auto& [key, n] : r.histogram) total += n;
    EXPECT_EQ(total, r.fits.size());
  }
}

TEST(VerifyStructure, WitnessAttainsMax) {
  const auto r = verify_structure_theorem(make_group({2, 4}), 12);
  ASSERT_LT(r.witness, r.fits.size());
  EXPECT_EQ(r.fits[r.witness].fit.bound, r.max_bound);
  for (const auto& f : r.fits) EXPECT_LE(f.fit.bound, r.max_bound);
}

TEST(VerifyUnions, C3TrendAndIntervals) {
  const auto r = verify_unions_structure(make_group({3}), 12);
  EXPECT_TRUE(r.all_intervals);
  EXPECT_EQ(r.max_aap_bound, 0);
  EXPECT_EQ(r.difference, 1);
  EXPECT_NEAR(r.density_limit, 5.0 / 6.0, 1e-12);
  EXPECT_TRUE(r.trend_checked);
  EXPECT_TRUE(r.trend_ok);
  EXPECT_TRUE(r.ok());
  for (const auto& row : r.rows) EXPECT_EQ(static_cast<std::int64_t>(row.size), row.rho_k - row.lambda_k + 1);
}

TEST(VerifyUnions, TrendIsSkippedBelowStart) {
  const auto r = verify_unions_structure(make_group({3}), 6);
  EXPECT_FALSE(r.trend_checked);
  EXPECT_TRUE(r.ok());
}

}  // namespace
}  // namespace zslen
