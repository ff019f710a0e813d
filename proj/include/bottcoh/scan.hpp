#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "bottcoh/bundle.hpp"
#include "bottcoh/criteria.hpp"

namespace bottcoh {

/// Seeded generator for reproducible corpora. Bounded draws are computed from
/// the raw 64-bit stream so results do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

/// Every canonical single atom (multiplicity 1) obtained from raw factor
/// indices 0 <= p_k <= n_k, |l_k| <= bound. Sorted, duplicates removed.
std::vector<Atom> enumerate_atoms(const Space& space, int bound);

/// Random sum of `summands` atoms with raw indices as in enumerate_atoms.
Bundle random_bundle(const Space& space, Rng& rng, int bound, int summands);

/// Exhaustive single atoms followed by `sample_budget` seeded random sums of
/// 2..max_summands atoms (none when max_summands < 2).
std::vector<Bundle> soundness_corpus(const Space& space, int bound, int max_summands,
                                     std::size_t sample_budget, std::uint64_t seed);

/// The vanishings listed in the P^2 x P^2 characterization, in order:
/// h^1(E(1,1)), h^2(E(0,1)), h^2(E(1,0)), h^2(E(-1,0)), h^2(E(0,-1)), h^3(E(-1,-1)).
std::vector<std::pair<int, Twist>> ex23_vanishings();

struct Ex23Evaluation {
  Integer h2;  // h^2(E)
  std::vector<CohomologyEntry> vanishings;
  bool satisfied = false;
};

Ex23Evaluation evaluate_ex23(const Bundle& e);

struct Ex23Report {
  int twist_bound = 0;
  std::size_t atoms_tested = 0;
  std::vector<Atom> satisfying;
  bool unique_expected = false;  // satisfying == {W(1,0)xW(1,0)}
};

Ex23Report scan_ex23(int twist_bound);

struct SoundnessReport {
  std::string criterion_id;
  Space space{std::vector<int>{2, 2}};
  std::vector<int> parameters;
  int twist_bound = 0;
  int max_summands = 0;
  std::size_t sample_budget = 0;
  std::uint64_t seed = 0;
  std::size_t tested = 0;          // atoms_tested + samples_tested
  std::size_t atoms_tested = 0;
  std::size_t samples_tested = 0;
  std::size_t criterion_met = 0;
  std::vector<Bundle> violations;  // criterion met but summand absent
};

SoundnessReport scan_soundness(const Space& space, int p, int q, int twist_bound,
                               int max_summands, std::size_t sample_budget,
                               std::uint64_t seed);

/// Single-factor variant: every single atom and every sum of two atoms
/// (exhaustive) on P^n, checked with check_prop13 for the given p.
SoundnessReport scan_prop13_soundness(int n, int p, int twist_bound);

}  // namespace bottcoh
