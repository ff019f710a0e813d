#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bottcoh/bundle.hpp"
#include "bottcoh/cohomology.hpp"

namespace bottcoh {

/// A cohomology group H^degree(E(twist)) together with its computed dimension.
struct CohomologyEntry {
  int degree = 0;
  Twist twist;
  Integer dim;

  bool vanishes() const { return dim == 0; }
  bool operator==(const CohomologyEntry&) const = default;
};

struct CriterionReport {
  std::string criterion_id;  // "prop13" or "thm21"
  std::vector<int> parameters;
  CohomologyEntry hypothesis;  // must be nonzero
  std::vector<CohomologyEntry> condition_a;
  std::vector<CohomologyEntry> condition_b;
  std::vector<CohomologyEntry> witnesses;  // every nonvanishing condition entry
  bool criterion_met = false;
  bool conclusion_verified = false;  // the expected atom is a summand of E

  bool conditions_hold() const { return witnesses.empty(); }
};

/// (degree, twist) pairs required to vanish by the biprojective criterion.
std::vector<std::pair<int, Twist>> thm21_condition_a(int m, int n, int p, int q);
std::vector<std::pair<int, Twist>> thm21_condition_b(int m, int n, int p, int q);

/// Single-factor criterion for an Omega^p summand on P^n:
///   h^p(E) != 0,
///   h^i(E(p-i+1)) = 0 for 1 <= i <= p,
///   h^i(E(p-i-1)) = 0 for p <= i <= n-1.
CriterionReport check_prop13(const Bundle& e, int p);

/// Biprojective criterion for an Omega^p x Omega^q summand on P^m x P^n.
/// The nonvanishing hypothesis is read at twist (0, 0).
CriterionReport check_thm21(const Bundle& e, int p, int q);

struct SupportPair {
  int degree = 0;
  int twist = 0;

  auto operator<=>(const SupportPair&) const = default;
};

struct SVReport {
  std::set<SupportPair> support;
  std::vector<std::pair<SupportPair, SupportPair>> violating_pairs;
  bool passes = false;
};

/// Stueckrad-Vogel condition on the intermediate-cohomology support of a
/// bundle on P^n. Sufficient for Buchsbaum, not necessary.
SVReport check_sv(const Bundle& e);

/// Support set recomputed from cohomology values over twists [lo, hi].
std::set<SupportPair> sweep_support(const Bundle& e, int lo, int hi);

struct AcmVerdict {
  bool acm = false;
  std::string verdict;
};

/// ACM test on P^n: every canonical atom is a line bundle.
AcmVerdict is_acm(const Bundle& e);

}  // namespace bottcoh
