#include "zslen/lengths.hpp"

#include <limits>
#include <optional>
#include <string>
#include <unordered_map>

#include "zslen/errors.hpp"

namespace zslen {

namespace {

// Dense bitset of lengths: bit k set iff k is a length.
using LengthMask = std::vector<std::uint64_t>;

void or_shifted_by_one(LengthMask& acc, const LengthMask& m) {
  if (acc.size() < m.size() + 1) acc.resize(m.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    acc[i] |= (m[i] << 1) | carry;
    carry = m[i] >> 63;
  }
  acc[m.size()] |= carry;
  while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
}

LengthSet to_length_set(const LengthMask& m) {
  std::vector<std::int64_t> values;
  for (std::size_t w = 0; w < m.size(); ++w)
    for (std::uint64_t bits = m[w]; bits; bits &= bits - 1)
      values.push_back(static_cast<std::int64_t>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
  return LengthSet(std::move(values));
}

}  // namespace

struct LengthEngine::Impl {
  std::size_t letters;
  std::vector<ExponentVector> atoms;
  std::vector<std::vector<std::size_t>> by_pivot;  // atoms containing each letter
  Options options;
  std::unordered_map<std::u16string, LengthMask> memo;
  std::optional<AtomSet> source;

  static std::u16string key_of(std::span<const Multiplicity> b) {
    std::u16string key(b.size(), u'\0');
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] > std::numeric_limits<char16_t>::max())
        throw ResourceLimit("multiplicity", std::numeric_limits<char16_t>::max(),
                            "multiplicity " + std::to_string(b[i]) + " exceeds the factorization engine's key range");
      key[i] = static_cast<char16_t>(b[i]);
    }
    return key;
  }

  const LengthMask& compute(ExponentVector& b, const std::u16string& key) {
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    std::size_t pivot = 0;
    while (pivot < letters && b[pivot] == 0) ++pivot;
    LengthMask mask;
    if (pivot == letters) {
      mask = {1};
    } else {
      for (const std::size_t a : by_pivot[pivot]) {
        const auto& atom = atoms[a];
        bool fits = true;
        for (std::size_t i = pivot; i < letters; ++i)
          if (atom[i] > b[i]) {
            fits = false;
            break;
          }
        if (!fits) continue;
        for (std::size_t i = pivot; i < letters; ++i) b[i] -= atom[i];
        std::u16string sub = key;
        for (std::size_t i = pivot; i < letters; ++i) sub[i] = static_cast<char16_t>(b[i]);
        const LengthMask& inner = compute(b, sub);
        if (!(inner.size() == 1 && inner[0] == 0)) or_shifted_by_one(mask, inner);
        for (std::size_t i = pivot; i < letters; ++i) b[i] += atom[i];
      }
      if (mask.empty()) mask = {0};  // no factorization: empty set
    }
    if (memo.size() >= options.memo_limit)
      throw ResourceLimit("memo_limit", options.memo_limit,
                          "factorization memo exceeded " + std::to_string(options.memo_limit) + " entries");
    return memo.emplace(key, std::move(mask)).first->second;
  }
};

LengthEngine::LengthEngine(std::size_t letters, std::vector<ExponentVector> atoms, const Options& options)
    : impl_(std::make_unique<Impl>()) {
  impl_->letters = letters;
  impl_->options = options;
  impl_->by_pivot.resize(letters);
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    if (atoms[a].size() != letters) throw InvalidArgument("atom has the wrong number of letters");
    std::size_t first = 0;
    while (first < letters && atoms[a][first] == 0) ++first;
    if (first == letters) throw InvalidArgument("the empty word is not an atom");
    impl_->by_pivot[first].push_back(a);
    // An atom is reachable from pivot p only if its first letter is p, since
    // it must cover the pivot and cannot use letters before it (they are 0).
  }
  impl_->atoms = std::move(atoms);
}

LengthEngine::LengthEngine(const AtomSet& atoms, const Options& options)
    : LengthEngine(atoms.subset().size(), atoms.dense(), options) {
  impl_->source = atoms;
}

LengthEngine::~LengthEngine() = default;
LengthEngine::LengthEngine(LengthEngine&&) noexcept = default;
LengthEngine& LengthEngine::operator=(LengthEngine&&) noexcept = default;

LengthSet LengthEngine::lengths(std::span<const Multiplicity> b) {
  if (b.size() != impl_->letters) throw InvalidArgument("exponent vector has the wrong number of letters");
  ExponentVector work(b.begin(), b.end());
  const LengthMask& mask = impl_->compute(work, Impl::key_of(b));
  if (mask.size() == 1 && mask[0] == 0) throw InvalidArgument("element has no factorization into the given atoms");
  return to_length_set(mask);
}

LengthSet LengthEngine::length_set(const Sequence& b) {
  if (!impl_->source) throw InvalidArgument("engine was not built from an atom set");
  if (!(b.group() == impl_->source->group())) throw InvalidArgument("sequence and atoms are over different groups");
  if (!b.is_zero_sum()) throw InvalidArgument("sequence " + b.to_string() + " is not zero-sum");
  return lengths(b.exponents(impl_->source->subset()));
}

std::size_t LengthEngine::letters() const noexcept { return impl_->letters; }
std::span<const ExponentVector> LengthEngine::atoms() const noexcept { return impl_->atoms; }
std::size_t LengthEngine::memo_size() const noexcept { return impl_->memo.size(); }

LengthSet length_set(const Sequence& b, const AtomSet& atoms, const Options& options) {
  LengthEngine engine(atoms, options);
  return engine.length_set(b);
}

}  // namespace zslen
