#pragma once

#include <cstddef>
#include <cstdint>

namespace zslen {

inline constexpr std::int64_t kDefaultMaxGroupOrder = 64;

/// Resource ceilings and worker count shared by all enumeration routines.
struct Options {
  std::uint64_t node_limit = 100'000'000;  // lattice nodes visited by atom search
  std::size_t memo_limit = 4'000'000;      // factorization memo entries
  std::size_t product_limit = 4'000'000;   // distinct products held by union_k
  std::int64_t delta_star_max_order = 12;  // subset scan cap for delta_star
  unsigned threads = 1;
};

}  // namespace zslen
