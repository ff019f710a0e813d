#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "bottcoh/bundle_io.hpp"
#include "bottcoh/criteria.hpp"
#include "bottcoh/report.hpp"
#include "bottcoh/scan.hpp"

namespace bottcoh {
namespace {

bool has_witness(const CriterionReport& r, int degree, Twist t, int dim) {
  return std::any_of(r.witnesses.begin(), r.witnesses.end(), [&](const CohomologyEntry& w) {
    return w.degree == degree && w.twist == t && w.dim == dim;
  });
}

TEST(Prop13, OmegaOneOnP2) {
  auto r = check_prop13(parse_compact("P2:W(1,0)"), 1);
  EXPECT_EQ(r.hypothesis.dim, 1);
  ASSERT_EQ(r.condition_a.size(), 1u);
  EXPECT_EQ(r.condition_a[0].twist, Twist{1});
  ASSERT_EQ(r.condition_b.size(), 1u);
  EXPECT_EQ(r.condition_b[0].twist, Twist{-1});
  EXPECT_TRUE(r.criterion_met);
  EXPECT_TRUE(r.conclusion_verified);
}

TEST(Prop13, TrivialBundleFailsHypothesis) {
  auto r = check_prop13(parse_compact("P2:O(0)"), 1);
  EXPECT_EQ(r.hypothesis.dim, 0);
  EXPECT_FALSE(r.criterion_met);
  EXPECT_FALSE(r.conclusion_verified);
}

TEST(Prop13, LineBundleSummandIsHarmless) {
  auto r = check_prop13(parse_compact("P3:W(1,0)+O(5)"), 1);
  EXPECT_EQ(r.condition_a.size(), 1u);
  EXPECT_EQ(r.condition_b.size(), 2u);
  EXPECT_TRUE(r.criterion_met);
  EXPECT_TRUE(r.conclusion_verified);
}

TEST(Prop13, NeighbouringTwistBreaksCondition) {
  // Omega^1(1) contributes h^1 at twist -1, which condition (b) forbids.
  auto r = check_prop13(parse_compact("P3:W(1,0)+W(1,1)"), 1);
  EXPECT_FALSE(r.criterion_met);
  EXPECT_TRUE(has_witness(r, 1, {-1}, 1));
  EXPECT_TRUE(r.conclusion_verified);
}

TEST(Prop13, RejectsBadParameters) {
  EXPECT_THROW(check_prop13(parse_compact("P2:W(1,0)"), 0), InputError);
  EXPECT_THROW(check_prop13(parse_compact("P2:W(1,0)"), 2), InputError);
  EXPECT_THROW(check_prop13(parse_compact("W(1,0)xW(1,0)"), 1), InputError);
}

TEST(Thm21, OmegaBoxOmega) {
  auto r = check_thm21(parse_compact("W(1,0)xW(1,0)"), 1, 1);
  EXPECT_EQ(r.hypothesis.degree, 2);
  EXPECT_EQ(r.hypothesis.dim, 1);
  EXPECT_TRUE(r.criterion_met);
  EXPECT_TRUE(r.conclusion_verified);
  EXPECT_TRUE(r.witnesses.empty());
}

TEST(Thm21, ConditionTriplesMatchTheP2xP2Characterization) {
  std::set<std::pair<int, Twist>> generated;
  for (auto& x : thm21_condition_a(2, 2, 1, 1)) generated.insert(x);
  for (auto& x : thm21_condition_b(2, 2, 1, 1)) generated.insert(x);
  std::set<std::pair<int, Twist>> listed;
  for (auto& x : ex23_vanishings()) listed.insert(x);
  EXPECT_EQ(generated, listed);
  EXPECT_EQ(generated.size(), 6u);
  const auto triples_a = thm21_condition_a(2, 2, 1, 1);
  const std::set<std::pair<int, Twist>> a(triples_a.begin(), triples_a.end());
  EXPECT_EQ(a, (std::set<std::pair<int, Twist>>{{1, {1, 1}}, {2, {1, 0}}, {2, {0, 1}}}));
}

TEST(Thm21, ConditionTriplesSatisfyTheirConstraints) {
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 5; ++n)
      for (int p = 1; p < m; ++p)
        for (int q = 1; q < n; ++q) {
          for (auto& [i, t] : thm21_condition_a(m, n, p, q)) {
            EXPECT_EQ(i + t[0] + t[1], p + q + 1);
            EXPECT_TRUE(i >= 1 && i <= p + q && t[0] >= 0 && t[0] <= p && t[1] >= 0 && t[1] <= q);
          }
          for (auto& [i, t] : thm21_condition_b(m, n, p, q)) {
            EXPECT_EQ(i + t[0] + t[1], p + q - 1);
            EXPECT_TRUE(i >= p + q && i <= m + n - 1 && t[0] >= p - m && t[0] <= 0 &&
                        t[1] >= q - n && t[1] <= 0);
          }
        }
}

TEST(Thm21, ExtraLineBundleSummand) {
  auto r = check_thm21(parse_compact("W(1,0)xW(1,0)+O(3,3)"), 1, 1);
  EXPECT_TRUE(r.criterion_met);
  EXPECT_TRUE(r.conclusion_verified);
}

TEST(Thm21, NegativeLineBundleHasNoCohomology) {
  auto r = check_thm21(parse_compact("O(-1,-1)"), 1, 1);
  EXPECT_EQ(r.hypothesis.dim, 0);
  EXPECT_FALSE(r.criterion_met);
}

TEST(Thm21, WitnessesAreExhaustive) {
  auto r = check_thm21(parse_compact("O(0,-3)"), 1, 1);
  EXPECT_EQ(r.hypothesis.dim, 1);
  EXPECT_FALSE(r.criterion_met);
  EXPECT_FALSE(r.conclusion_verified);
  EXPECT_TRUE(has_witness(r, 2, {0, -1}, 3));
  EXPECT_TRUE(has_witness(r, 2, {1, 0}, 3));
  EXPECT_EQ(r.witnesses.size(), 2u);
}

TEST(Thm21, RejectsBadParameters) {
  EXPECT_THROW(check_thm21(parse_compact("W(1,0)xW(1,0)"), 2, 1), InputError);
  EXPECT_THROW(check_thm21(parse_compact("W(1,0)xW(1,0)"), 1, 0), InputError);
  EXPECT_THROW(check_thm21(parse_compact("P2:W(1,0)"), 1, 1), InputError);
}

TEST(Thm21, HigherDimensionalExample) {
  auto r = check_thm21(parse_compact("P3xP2:W(2,0)xW(1,0)+O(1,-2)"), 2, 1);
  EXPECT_EQ(r.hypothesis.dim, 1);
  EXPECT_TRUE(r.criterion_met);
  EXPECT_TRUE(r.conclusion_verified);
}

TEST(SV, DifferentDegreesPass) {
  auto r = check_sv(parse_compact("P3:W(1,0)+W(2,0)"));
  EXPECT_EQ(r.support, (std::set<SupportPair>{{1, 0}, {2, 0}}));
  EXPECT_TRUE(r.passes);
}

TEST(SV, AdjacentTwistsFail) {
  auto r = check_sv(parse_compact("P3:W(1,0)+W(1,1)"));
  EXPECT_EQ(r.support, (std::set<SupportPair>{{1, 0}, {1, -1}}));
  EXPECT_FALSE(r.passes);
  ASSERT_EQ(r.violating_pairs.size(), 1u);
  EXPECT_EQ(r.violating_pairs[0].first, (SupportPair{1, -1}));
  EXPECT_EQ(r.violating_pairs[0].second, (SupportPair{1, 0}));
}

TEST(SV, SingleAtomsAlwaysPass) {
  for (int n = 2; n <= 5; ++n)
    for (int p = 1; p < n; ++p)
      for (int l = -4; l <= 4; ++l) {
        auto r = check_sv(make_atom_bundle(Space({n}), {{p, l}}));
        EXPECT_TRUE(r.passes);
        EXPECT_EQ(r.support.size(), 1u);
      }
}

TEST(SV, StructuralSupportMatchesSweep) {
  Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    Bundle e = random_bundle(Space({n}), rng, 4, 1 + trial % 3);
    EXPECT_EQ(check_sv(e).support, sweep_support(e, -4 - n - 1, 4 + n + 1));
  }
}

TEST(SV, RejectsProductSpace) { EXPECT_THROW(check_sv(parse_compact("O(0,0)")), InputError); }

TEST(Acm, Examples) {
  EXPECT_TRUE(is_acm(parse_compact("P3:O(2)+O(-1)")).acm);
  EXPECT_FALSE(is_acm(parse_compact("P3:W(1,0)")).acm);
  EXPECT_TRUE(is_acm(parse_compact("P3:W(3,1)")).acm);
  EXPECT_TRUE(is_acm(parse_compact("P1:W(1,4)")).acm);
  EXPECT_NE(is_acm(parse_compact("P3:O(0)")).verdict.find("line bundles"), std::string::npos);
  EXPECT_THROW(is_acm(parse_compact("O(0,0)")), InputError);
}

TEST(Ex23, OmegaBoxOmegaSatisfiesAllClauses) {
  auto r = evaluate_ex23(parse_compact("W(1,0)xW(1,0)"));
  EXPECT_EQ(r.h2, 1);
  EXPECT_EQ(r.vanishings.size(), 6u);
  EXPECT_TRUE(r.satisfied);
}

TEST(Ex23, LineBundleFails) {
  auto r = evaluate_ex23(parse_compact("O(0,-3)"));
  EXPECT_FALSE(r.satisfied);
  EXPECT_EQ(r.vanishings[4].twist, (Twist{0, -1}));
  EXPECT_EQ(r.vanishings[4].dim, 3);
}

TEST(Ex23, SmallScanFindsOnlyOmegaBoxOmega) {
  auto r = scan_ex23(2);
  EXPECT_TRUE(r.unique_expected);
  EXPECT_GT(r.atoms_tested, 0u);
}

TEST(EnumerateAtoms, CanonicalAndDeduplicated) {
  auto atoms = enumerate_atoms(Space({2}), 1);
  // p in {0,1,2}, l in [-1,1]; W(2,l) folds to O(l-3), disjoint from O(-1..1).
  EXPECT_EQ(atoms.size(), 9u);
  auto p1 = enumerate_atoms(Space({1}), 2);
  // O(-2..2) and W(1,l) = O(l-2): O(-4..2)
  EXPECT_EQ(p1.size(), 7u);
}

TEST(Soundness, EmptySampleBudget) {
  auto r = scan_soundness(Space({2, 2}), 1, 1, 1, 2, 0, 1);
  EXPECT_EQ(r.samples_tested, 0u);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Soundness, DeterministicForFixedSeed) {
  auto a = scan_soundness(Space({2, 2}), 1, 1, 2, 3, 200, 42);
  auto b = scan_soundness(Space({2, 2}), 1, 1, 2, 3, 200, 42);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  EXPECT_EQ(a.samples_tested, 200u);
  EXPECT_TRUE(a.violations.empty());
  EXPECT_GT(a.criterion_met, 0u);
}

TEST(Soundness, Prop13Exhaustive) {
  auto r = scan_prop13_soundness(3, 2, 2);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_GT(r.criterion_met, 0u);
}

}  // namespace
}  // namespace bottcoh
