#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zslen/atoms.hpp"
#include "zslen/group.hpp"
#include "zslen/length_set.hpp"
#include "zslen/lengths.hpp"
#include "zslen/options.hpp"
#include "zslen/sequence.hpp"

namespace zslen {

/// A Krull monoid H = { a in F(P) : the classes of a sum to 0 } given by a
/// finite prime set P with a class map onto G0. Primes are ordered by class,
/// then by index within the class.
struct KrullInstance {
  FiniteAbelianGroup group;
  std::vector<ElementId> subset;     // G0, sorted
  std::vector<std::string> labels;   // "p<class>_<j>"
  std::vector<ElementId> classes;    // class of each prime

  std::size_t primes() const noexcept { return classes.size(); }
};

/// An element of F(P) as an exponent vector over the instance's primes.
using PrimeWord = ExponentVector;

/// `primes_per_class[i]` primes over the i-th element of the sorted subset.
KrullInstance make_krull_instance(const FiniteAbelianGroup& group, std::span<const ElementId> subset,
                                  std::span<const unsigned> primes_per_class);
KrullInstance make_krull_instance(const FiniteAbelianGroup& group, std::span<const ElementId> subset,
                                  unsigned primes_per_class);
/// Between `min_primes` and `max_primes` primes per class, drawn from `seed`.
KrullInstance random_krull_instance(const FiniteAbelianGroup& group, std::span<const ElementId> subset,
                                    std::uint64_t seed, unsigned min_primes = 1, unsigned max_primes = 3);

bool in_monoid(const KrullInstance& instance, const PrimeWord& a);
/// Replaces every prime by its class. Throws InvalidArgument unless a is in H.
Sequence beta(const KrullInstance& instance, const PrimeWord& a);
/// "p1_0^2*p2_1", or "1" for the empty word.
std::string word_to_string(const KrullInstance& instance, const PrimeWord& a);

/// Arithmetic inside H computed from the primes alone: atoms are the
/// minimal nonempty words whose classes sum to zero, and lengths come from
/// a factorization engine over those words.
class KrullMonoid {
 public:
  explicit KrullMonoid(KrullInstance instance, const Options& options = {});

  const KrullInstance& instance() const noexcept { return instance_; }
  std::span<const PrimeWord> atoms() const noexcept { return atoms_; }
  bool is_atom(const PrimeWord& a) const;
  /// L_H(a). Throws InvalidArgument unless a is in H.
  LengthSet length_set(const PrimeWord& a);

 private:
  KrullInstance instance_;
  std::vector<PrimeWord> atoms_;  // sorted
  LengthEngine engine_;
};

/// One-shot L_H(a) without going through beta.
LengthSet direct_length_set(const KrullInstance& instance, const PrimeWord& a, const Options& options = {});

struct TransferReport {
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::uint64_t passes = 0;  // L_H(a) == L(beta(a))
  std::uint64_t homomorphism_passes = 0;  // beta(ab) == beta(a) beta(b)
  std::uint64_t lifting_passes = 0;       // a split of beta(a) lifts to a split of a
  std::optional<PrimeWord> counterexample;
  std::optional<LengthSet> direct_lengths;
  std::optional<LengthSet> transferred_lengths;
  std::string failure;  // which check failed first, empty when none did

  bool ok() const {
    return passes == samples && homomorphism_passes == samples && lifting_passes == samples;
  }
};

/// Samples random a in H (products of random atoms of H, at most
/// `max_word_length` primes) and compares L_H(a) with L(beta(a)). Each
/// sample also checks beta on a product and lifts a random split of beta(a).
TransferReport check_transfer(const KrullInstance& instance, std::uint64_t samples, std::uint64_t max_word_length,
                              std::uint64_t seed, const Options& options = {});

struct AtomCorrespondenceReport {
  std::uint64_t h_atoms = 0;        // atoms of H found by the direct search
  std::uint64_t words_checked = 0;  // nonempty words in H with at most D(G0) primes
  std::uint64_t beta_atoms = 0;     // of those, words with beta(a) an atom of B(G0)
  std::optional<PrimeWord> mismatch;

  bool ok() const { return !mismatch && h_atoms == beta_atoms; }
};

/// Cross-enumeration: every word of H up to the longest atom length over G0
/// is an atom of H iff its image is an atom of B(G0).
AtomCorrespondenceReport check_atom_correspondence(const KrullInstance& instance, const Options& options = {});

}  // namespace zslen
