#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bottcoh/bundle.hpp"
#include "bottcoh/integer.hpp"

namespace bottcoh {

/// h^0 .. h^dim of a bundle at one twist.
struct CohomologyVector {
  std::vector<Integer> dims;

  Integer euler() const;
  bool operator==(const CohomologyVector&) const = default;
};

/// h^i(P^n, Omega^p(l)) by the Bott formula. Nonzero in at most one degree.
Integer bott_dim(int n, int p, int l, int i);

/// Full vector (h^0..h^n) of Omega^p(l) on P^n; memoized, safe to call
/// from several threads.
const std::vector<Integer>& factor_cohomology(int n, int p, int l);

/// Kunneth combination over the atoms of `e` twisted by `t`.
CohomologyVector cohomology(const Bundle& e, const Twist& t);

Integer euler(const Bundle& e, const Twist& t);
Integer factor_euler(int n, FactorAtom a);

/// One line-bundle term O(twist)^multiplicity at homological position
/// `position` of a resolution 0 -> O(-n-1) -> ... -> O(-r-1)^{C(n+1,r+1)} -> W.
/// Position 0 is the term adjacent to W.
struct ResolutionTerm {
  int position = 0;
  int twist = 0;
  Integer multiplicity;
};

/// Left resolution of W = Omega^r(c) on P^n by sums of line bundles.
/// A line bundle resolves itself in one term.
std::vector<ResolutionTerm> line_bundle_resolution(int n, FactorAtom w);

/// chi(A (x) W(l)) on P^n, evaluated through the line-bundle resolution of W.
Integer euler_tensor(int n, FactorAtom a, FactorAtom w, int l);

/// Inclusive twist range per factor.
struct TwistGrid {
  std::vector<std::pair<int, int>> ranges;

  std::vector<Twist> points() const;  // row-major, ascending
};

struct CohomologyTable {
  TwistGrid grid;
  std::vector<std::pair<Twist, CohomologyVector>> entries;
};

CohomologyTable table(const Bundle& e, const TwistGrid& grid);

}  // namespace bottcoh
