#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>

#include "zslen/atoms.hpp"

namespace zslen {

inline constexpr int kAtomCacheFormatVersion = 1;

/// File holding the atoms of (group, subset) inside `dir`.
std::filesystem::path atom_cache_path(const std::filesystem::path& dir, const FiniteAbelianGroup& group,
                                      std::span<const ElementId> subset);

/// Writes the atom set as versioned JSON to a temporary file in `dir` and
/// renames it into place. Throws std::runtime_error on I/O failure.
void cache_store(const std::filesystem::path& dir, const AtomSet& atoms);

struct CacheLoadResult {
  std::optional<AtomSet> atoms;
  std::string warning;  // set when a file existed but was rejected
};

/// Reads and validates a cached atom set: format version, group, subset,
/// checksum, and that every entry is an atom over the subset. Anything off
/// yields no atoms plus a warning; a missing file yields neither.
CacheLoadResult cache_load(const std::filesystem::path& dir, const FiniteAbelianGroup& group,
                           std::span<const ElementId> subset);

struct CachedAtoms {
  AtomSet atoms;
  bool from_cache = false;
  std::string warning;
};

/// Cache hit, or enumerate and store. Store failures become warnings.
CachedAtoms load_or_compute_atoms(const std::filesystem::path& dir, const FiniteAbelianGroup& group,
                                  std::span<const ElementId> subset, const Options& options = {});

}  // namespace zslen
