#include "zslen/atoms.hpp"

#include <algorithm>
#include <bitset>
#include <map>

#include "zslen/errors.hpp"
#include "zslen/parallel.hpp"

namespace zslen {

AtomSet::AtomSet(FiniteAbelianGroup group, std::vector<ElementId> subset, std::vector<Sequence> atoms)
    : group_(std::move(group)), subset_(normalize_subset(group_, subset)), atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
}

std::uint64_t AtomSet::max_length() const noexcept {
  std::uint64_t best = 0;
  for (const auto& a : atoms_) best = std::max(best, a.length());
  return best;
}

bool AtomSet::contains(const Sequence& s) const { return std::binary_search(atoms_.begin(), atoms_.end(), s); }

std::vector<ExponentVector> AtomSet::dense() const {
  std::vector<ExponentVector> out;
  out.reserve(atoms_.size());
  for (const auto& a : atoms_) out.push_back(a.exponents(subset_));
  return out;
}

bool is_atom(const Sequence& s) {
  if (s.empty() || !s.is_zero_sum()) return false;
  const auto& group = s.group();
  const auto terms = s.terms();
  const std::uint64_t total = s.length();
  // Depth-first over sub-exponent vectors T <= S; a hit is a zero-sum T with
  // 0 < |T| < |S|.
  auto search = [&](auto&& self, std::size_t i, ElementId sum, std::uint64_t len) -> bool {
    if (i == terms.size()) return sum == 0 && len > 0 && len < total;
    ElementId acc = sum;
    for (Multiplicity m = 0; m <= terms[i].second; ++m) {
      if (self(self, i + 1, acc, len + m)) return true;
      acc = group.add(acc, terms[i].first);
    }
    return false;
  };
  return !search(search, 0, 0, 0);
}

namespace {

// Set of nonempty subsums of a zero-sum-free word, one bit per group element.
// Group orders are capped well below this width by configuration; larger
// groups fall back to a vector.
class SubsumSet {
 public:
  explicit SubsumSet(std::size_t n) : bits_(n, false) {}
  bool test(ElementId g) const { return bits_[g]; }
  // this := this ∪ (this + g) ∪ {g}
  SubsumSet extended(const FiniteAbelianGroup& group, ElementId g) const {
    SubsumSet out = *this;
    for (ElementId h = 0; h < bits_.size(); ++h)
      if (bits_[h]) out.bits_[group.add(h, g)] = true;
    out.bits_[g] = true;
    return out;
  }

 private:
  std::vector<bool> bits_;
};

struct SearchState {
  const FiniteAbelianGroup& group;
  std::span<const ElementId> classes;
  const std::vector<std::vector<bool>>& reachable;  // subgroup generated by classes[i..]
  const Options& options;
  std::atomic<std::uint64_t>& nodes;
  ExponentVector word;
  std::vector<ExponentVector> found;
};

void extend(SearchState& st, std::size_t start, ElementId sum, const SubsumSet& subsums) {
  for (std::size_t j = start; j < st.classes.size(); ++j) {
    if (st.nodes.fetch_add(1, std::memory_order_relaxed) >= st.options.node_limit)
      throw ResourceLimit("node_limit", st.options.node_limit,
                          "atom search exceeded the node limit of " + std::to_string(st.options.node_limit) +
                              " lattice nodes");
    // The closing letter must be reachable from letters j.. onwards.
    if (!st.reachable[j][st.group.neg(sum)]) break;
    const ElementId g = st.classes[j];
    const ElementId next = st.group.add(sum, g);
    ++st.word[j];
    if (next == 0) {
      // Prefix is zero-sum free, so the word closes to a minimal zero-sum word.
      st.found.push_back(st.word);
    } else if (g != 0 && !subsums.test(st.group.neg(g))) {
      // Still zero-sum free: -g was not already a subsum.
      extend(st, j, next, subsums.extended(st.group, g));
    }
    --st.word[j];
  }
}

}  // namespace

std::vector<ExponentVector> minimal_zero_sum_words(const FiniteAbelianGroup& group,
                                                   std::span<const ElementId> letter_classes,
                                                   const Options& options, std::uint64_t* nodes_out) {
  const std::size_t n = letter_classes.size();
  const auto order = static_cast<std::size_t>(group.order());
  for (const ElementId c : letter_classes)
    if (c >= order) throw InvalidArgument("letter class outside the group");

  std::vector<std::vector<bool>> reachable(n + 1, std::vector<bool>(order, false));
  reachable[n][0] = true;
  for (std::size_t i = n; i-- > 0;) {
    reachable[i] = reachable[i + 1];
    std::vector<ElementId> frontier;
    for (ElementId h = 0; h < order; ++h)
      if (reachable[i][h]) frontier.push_back(h);
    while (!frontier.empty()) {
      const ElementId h = group.add(frontier.back(), letter_classes[i]);
      frontier.pop_back();
      if (!reachable[i][h]) {
        reachable[i][h] = true;
        frontier.push_back(h);
      }
    }
  }

  // Top-level branches (the first letter of the word) are independent
  // subtrees; they run in parallel and are merged in branch order.
  std::atomic<std::uint64_t> nodes{0};
  std::vector<std::vector<ExponentVector>> per_branch(n);
  parallel_for(n, options.threads, [&](std::size_t j, unsigned) {
    SearchState st{group, letter_classes, reachable, options, nodes, ExponentVector(n, 0), {}};
    const ElementId g = letter_classes[j];
    st.word[j] = 1;
    if (g == 0) {
      st.found.push_back(st.word);
    } else if (reachable[j][group.neg(g)]) {
      extend(st, j, g, SubsumSet(order).extended(group, g));
    }
    per_branch[j] = std::move(st.found);
  });
  if (nodes_out) *nodes_out = nodes.load();
  std::vector<ExponentVector> out;
  for (auto& b : per_branch)
    for (auto& w : b) out.push_back(std::move(w));
  return out;
}

AtomSet enumerate_atoms(const FiniteAbelianGroup& group, std::span<const ElementId> subset, const Options& options) {
  const auto alphabet = normalize_subset(group, subset);
  if (alphabet.empty()) throw InvalidArgument("atom enumeration needs a nonempty subset");
  const auto words = minimal_zero_sum_words(group, alphabet, options);
  std::vector<Sequence> atoms;
  atoms.reserve(words.size());
  for (const auto& w : words) atoms.push_back(Sequence::from_exponents(group, alphabet, w));
  return AtomSet(group, alphabet, std::move(atoms));
}

AtomSet enumerate_atoms(const FiniteAbelianGroup& group, const Options& options) {
  return enumerate_atoms(group, all_elements(group), options);
}

DavenportResult davenport(const AtomSet& atoms) {
  const Sequence* best = nullptr;
  for (const auto& a : atoms.atoms())
    if (!best || a.length() > best->length()) best = &a;
  if (!best) throw InvalidArgument("empty atom set has no Davenport constant");
  return {best->length(), *best};
}

DavenportResult davenport(const FiniteAbelianGroup& group, const Options& options) {
  return davenport(enumerate_atoms(group, options));
}

std::uint64_t davenport_star(const FiniteAbelianGroup& group) {
  std::uint64_t d = 1;
  for (const auto n : group.invariant_factors()) d += static_cast<std::uint64_t>(n - 1);
  return d;
}

Sequence davenport_star_witness(const FiniteAbelianGroup& group) {
  const std::size_t r = group.rank();
  if (r == 0) return Sequence(group, {{0, 1}});
  std::vector<Sequence::Term> terms;
  std::vector<std::int64_t> all_ones(r, 1);
  terms.emplace_back(group.index_of(all_ones), 1);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::int64_t> e(r, 0);
    e[i] = 1;
    terms.emplace_back(group.index_of(e), static_cast<Multiplicity>(group.invariant_factors()[i] - 1));
  }
  return Sequence(group, std::move(terms));
}

}  // namespace zslen
