#include "bottcoh/scan.hpp"

#include <algorithm>
#include <set>

namespace bottcoh {

int Rng::uniform(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

std::vector<Atom> enumerate_atoms(const Space& space, int bound) {
  std::set<std::vector<FactorAtom>> seen;
  std::vector<FactorAtom> cur(space.factor_count());
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == space.factor_count()) {
      seen.insert(cur);
      return;
    }
    const int n = space.dim(k);
    for (int p = 0; p <= n; ++p)
      for (int l = -bound; l <= bound; ++l) {
        cur[k] = canonical({p, l}, n);
        self(self, k + 1);
      }
  };
  rec(rec, 0);
  std::vector<Atom> out;
  for (const auto& factors : seen) out.push_back({factors, 1});
  return out;
}

Bundle random_bundle(const Space& space, Rng& rng, int bound, int summands) {
  std::vector<Atom> atoms;
  for (int s = 0; s < summands; ++s) {
    Atom a;
    for (std::size_t k = 0; k < space.factor_count(); ++k)
      a.factors.push_back({rng.uniform(0, space.dim(k)), rng.uniform(-bound, bound)});
    atoms.push_back(std::move(a));
  }
  return Bundle(space, std::move(atoms));
}

std::vector<Bundle> soundness_corpus(const Space& space, int bound, int max_summands,
                                     std::size_t sample_budget, std::uint64_t seed) {
  std::vector<Bundle> out;
  for (const auto& a : enumerate_atoms(space, bound)) out.emplace_back(space, std::vector{a});
  if (max_summands < 2) return out;
  Rng rng(seed);
  for (std::size_t s = 0; s < sample_budget; ++s)
    out.push_back(random_bundle(space, rng, bound, rng.uniform(2, max_summands)));
  return out;
}

std::vector<std::pair<int, Twist>> ex23_vanishings() {
  return {{1, {1, 1}}, {2, {0, 1}}, {2, {1, 0}}, {2, {-1, 0}}, {2, {0, -1}}, {3, {-1, -1}}};
}

Ex23Evaluation evaluate_ex23(const Bundle& e) {
  if (!(e.space() == Space({2, 2}))) throw InputError("ex23 is stated on P^2 x P^2");
  Ex23Evaluation r;
  r.h2 = cohomology(e, {0, 0}).dims[2];
  bool all_zero = true;
  for (auto& [i, t] : ex23_vanishings()) {
    r.vanishings.push_back({i, t, cohomology(e, t).dims[i]});
    all_zero = all_zero && r.vanishings.back().vanishes();
  }
  r.satisfied = r.h2 != 0 && all_zero;
  return r;
}

Ex23Report scan_ex23(int twist_bound) {
  const Space space({2, 2});
  Ex23Report r;
  r.twist_bound = twist_bound;
  for (const auto& a : enumerate_atoms(space, twist_bound)) {
    ++r.atoms_tested;
    if (evaluate_ex23(Bundle(space, {a})).satisfied) r.satisfying.push_back(a);
  }
  r.unique_expected =
      r.satisfying.size() == 1 && r.satisfying.front() == omega_atom(space, {1, 1});
  return r;
}

SoundnessReport scan_soundness(const Space& space, int p, int q, int twist_bound,
                               int max_summands, std::size_t sample_budget,
                               std::uint64_t seed) {
  SoundnessReport r;
  r.criterion_id = "thm21";
  r.space = space;
  r.parameters = {p, q};
  r.twist_bound = twist_bound;
  r.max_summands = max_summands;
  r.sample_budget = sample_budget;
  r.seed = seed;
  const std::size_t atom_count = enumerate_atoms(space, twist_bound).size();
  for (const auto& e : soundness_corpus(space, twist_bound, max_summands, sample_budget, seed)) {
    auto report = check_thm21(e, p, q);
    ++(r.tested < atom_count ? r.atoms_tested : r.samples_tested);
    ++r.tested;
    if (report.criterion_met) {
      ++r.criterion_met;
      if (!report.conclusion_verified) r.violations.push_back(e);
    }
  }
  return r;
}

SoundnessReport scan_prop13_soundness(int n, int p, int twist_bound) {
  const Space space({n});
  SoundnessReport r;
  r.criterion_id = "prop13";
  r.space = space;
  r.parameters = {p};
  r.twist_bound = twist_bound;
  r.max_summands = 2;
  auto atoms = enumerate_atoms(space, twist_bound);
  auto run = [&](const Bundle& e) {
    auto report = check_prop13(e, p);
    ++(e.atoms().size() == 1 && e.atoms()[0].mult == 1 ? r.atoms_tested : r.samples_tested);
    ++r.tested;
    if (report.criterion_met) {
      ++r.criterion_met;
      if (!report.conclusion_verified) r.violations.push_back(e);
    }
  };
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    run(Bundle(space, {atoms[i]}));
    for (std::size_t j = i; j < atoms.size(); ++j) run(Bundle(space, {atoms[i], atoms[j]}));
  }
  return r;
}

}  // namespace bottcoh
