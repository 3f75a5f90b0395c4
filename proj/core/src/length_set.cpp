#include "zslen/length_set.hpp"

#include <algorithm>

#include "zslen/errors.hpp"

namespace zslen {

LengthSet::LengthSet(std::initializer_list<std::int64_t> values) : LengthSet(std::vector<std::int64_t>(values)) {}

LengthSet::LengthSet(std::vector<std::int64_t> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("a length set must be nonempty");
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  if (values_.front() < 0) throw InvalidArgument("a length set holds nonnegative integers only");
}

bool LengthSet::contains(std::int64_t v) const noexcept {
  return std::binary_search(values_.begin(), values_.end(), v);
}

std::string LengthSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out + "}";
}

std::vector<std::int64_t> delta_of(const LengthSet& l) {
  std::vector<std::int64_t> gaps;
  const auto v = l.values();
  for (std::size_t i = 1; i < v.size(); ++i) gaps.push_back(v[i] - v[i - 1]);
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  return gaps;
}

Rational elasticity_of(const LengthSet& l) {
  if (l.min() == 0) {
    if (l.max() == 0) return Rational(1);
    throw InvalidArgument("elasticity of " + l.to_string() + " is infinite");
  }
  return Rational(l.max(), l.min());
}

LengthSet sumset(const LengthSet& a, const LengthSet& b) {
  std::vector<std::int64_t> out;
  out.reserve(a.size() * b.size());
  for (const auto x : a.values())
    for (const auto y : b.values()) out.push_back(x + y);
  return LengthSet(std::move(out));
}

LengthSet shift(const LengthSet& l, std::int64_t m) {
  if (l.min() + m < 0) throw InvalidArgument("shift by " + std::to_string(m) + " makes " + l.to_string() + " negative");
  std::vector<std::int64_t> out(l.values().begin(), l.values().end());
  for (auto& v : out) v += m;
  return LengthSet(std::move(out));
}

LengthSet dilate(std::int64_t k, const LengthSet& l) {
  if (k < 0) throw InvalidArgument("dilation factor must be nonnegative");
  std::vector<std::int64_t> out(l.values().begin(), l.values().end());
  for (auto& v : out) v *= k;
  return LengthSet(std::move(out));
}

}  // namespace zslen
