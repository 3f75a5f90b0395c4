#include "zslen/atom_cache.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "zslen/errors.hpp"

namespace zslen {

namespace {

using nlohmann::json;

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << v;
  return s.str();
}

std::string checksum(const std::vector<ExponentVector>& atoms) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& a : atoms) {
    h = fnv1a(h, a.size());
    for (const auto m : a) h = fnv1a(h, m);
  }
  return hex(h);
}

std::string reject(const std::filesystem::path& file, const std::string& why) {
  return "ignoring atom cache " + file.string() + ": " + why;
}

}  // namespace

std::filesystem::path atom_cache_path(const std::filesystem::path& dir, const FiniteAbelianGroup& group,
                                      std::span<const ElementId> subset) {
  const auto alphabet = normalize_subset(group, subset);
  std::string name = "atoms-" + group.to_string();
  std::replace(name.begin(), name.end(), ',', 'x');
  if (alphabet.size() == static_cast<std::size_t>(group.order())) {
    name += "-all";
  } else {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto g : alphabet) h = fnv1a(h, g);
    name += "-" + hex(h);
  }
  return dir / (name + ".json");
}

void cache_store(const std::filesystem::path& dir, const AtomSet& atoms) {
  const auto& group = atoms.group();
  json subset = json::array();
  for (const auto g : atoms.subset()) {
    const auto c = group.coords(g);
    subset.push_back(std::vector<std::int64_t>(c.begin(), c.end()));
  }
  const auto dense = atoms.dense();
  json doc = {
      {"format_version", kAtomCacheFormatVersion},
      {"invariant_factors", std::vector<std::int64_t>(group.invariant_factors().begin(),
                                                      group.invariant_factors().end())},
      {"subset", subset},
      {"atoms", dense},
      {"checksum", checksum(dense)},
  };

  std::filesystem::create_directories(dir);
  const auto target = atom_cache_path(dir, group, atoms.subset());
  auto temp = target;
  temp += ".tmp" + hex(std::random_device{}());
  {
    std::ofstream out(temp);
    if (!out) throw std::runtime_error("cannot write " + temp.string());
    out << doc.dump() << '\n';
    if (!out.flush()) throw std::runtime_error("cannot write " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

CacheLoadResult cache_load(const std::filesystem::path& dir, const FiniteAbelianGroup& group,
                           std::span<const ElementId> subset) {
  const auto file = atom_cache_path(dir, group, subset);
  std::ifstream in(file);
  if (!in) return {};
  const auto alphabet = normalize_subset(group, subset);
  try {
    const json doc = json::parse(in);
    if (doc.at("format_version").get<int>() != kAtomCacheFormatVersion)
      return {std::nullopt, reject(file, "format version mismatch")};
    const auto factors = doc.at("invariant_factors").get<std::vector<std::int64_t>>();
    if (!std::equal(factors.begin(), factors.end(), group.invariant_factors().begin(),
                    group.invariant_factors().end()))
      return {std::nullopt, reject(file, "group mismatch")};
    std::vector<ElementId> stored;
    for (const auto& c : doc.at("subset")) {
      const auto coords = c.get<std::vector<std::int64_t>>();
      if (coords.size() != group.rank()) return {std::nullopt, reject(file, "malformed subset")};
      stored.push_back(group.index_of(coords));
    }
    if (stored != alphabet) return {std::nullopt, reject(file, "subset mismatch")};
    const auto dense = doc.at("atoms").get<std::vector<ExponentVector>>();
    if (doc.at("checksum").get<std::string>() != checksum(dense))
      return {std::nullopt, reject(file, "checksum mismatch")};
    std::vector<Sequence> atoms;
    std::set<ExponentVector> seen;
    for (const auto& e : dense) {
      if (e.size() != alphabet.size()) return {std::nullopt, reject(file, "malformed atom")};
      if (!seen.insert(e).second) return {std::nullopt, reject(file, "duplicate atom")};
      Sequence s = Sequence::from_exponents(group, alphabet, e);
      if (s.empty() || !s.is_zero_sum()) return {std::nullopt, reject(file, "entry " + s.to_string() + " is not zero-sum")};
      // Minimality of every entry also rules out one entry dividing another.
      if (!is_atom(s)) return {std::nullopt, reject(file, "entry " + s.to_string() + " is not minimal")};
      atoms.push_back(std::move(s));
    }
    return {AtomSet(group, alphabet, std::move(atoms)), ""};
  } catch (const std::exception& e) {
    return {std::nullopt, reject(file, e.what())};
  }
}

CachedAtoms load_or_compute_atoms(const std::filesystem::path& dir, const FiniteAbelianGroup& group,
                                  std::span<const ElementId> subset, const Options& options) {
  auto loaded = cache_load(dir, group, subset);
  if (loaded.atoms) return {std::move(*loaded.atoms), true, ""};
  CachedAtoms out{enumerate_atoms(group, subset, options), false, std::move(loaded.warning)};
  try {
    cache_store(dir, out.atoms);
  } catch (const std::exception& e) {
    if (!out.warning.empty()) out.warning += "; ";
    out.warning += std::string("could not store atom cache: ") + e.what();
  }
  return out;
}

}  // namespace zslen
