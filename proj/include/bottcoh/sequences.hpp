#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bottcoh/bundle.hpp"
#include "bottcoh/cohomology.hpp"
#include "bottcoh/criteria.hpp"

namespace bottcoh {

enum class SequenceKind { e1, e2, e3, e4, glued_phi, glued_psi };

std::string to_string(SequenceKind kind);
SequenceKind parse_sequence_kind(const std::string& name);

/// Tensoring by the pullback of Omega^r(c) from factor `factor`.
struct Multiplier {
  std::size_t factor = 0;
  FactorAtom atom;
};

/// base^coefficient (x) multipliers.
struct SequenceTerm {
  Bundle base;
  std::vector<Multiplier> multipliers;
  Integer coefficient = 1;

  bool composite() const { return multipliers.size() > 1; }
};

/// Exact sequence 0 -> terms[0] -> ... -> terms[N] -> 0.
struct Sequence {
  SequenceKind kind;
  std::vector<SequenceTerm> terms;
};

/// Koszul sequences on P^n.
///   e1, e2:  0 -> Omega^r -> O(-r)^{C(n+1,r)} -> ... -> O(-1)^{C(n+1,1)} -> O -> 0
///   e3, e4:  0 -> O(-n-1) -> O(-n)^{C(n+1,n)} -> ... -> O(-r-1)^{C(n+1,r+1)} -> Omega^r -> 0
/// e1/e3 and e2/e4 differ only in which factor of P^m x P^n they are pulled
/// back from; here they live on the single space P^n.
Sequence koszul_sequence(int n, int r, SequenceKind kind);

enum class GluedSide { phi, psi };

/// The two sequences obtained by splicing pulled-back Koszul sequences:
///   phi: 0 -> E -> E(0,1)^{e_1} -> ... -> E(0,q)^{e_q}
///          -> E(1,0)^{f_1} (x) W_2 -> ... -> E(p,0)^{f_p} (x) W_2 -> E (x) W_1 (x) W_2 -> 0
///        with W_1 = (Omega^p)^dual = Omega^{m-p}(m+1), W_2 = Omega^{n-q}(n+1);
///   psi: 0 -> E^(-m-1,-n-1) -> E^(-m-1,-n)^{e_n} -> ... -> E^(-m-1,-q-1)^{e_{q+1}}
///          -> E^(-m,0)^{f_m} (x) Omega^q -> ... -> E^(-p-1,0)^{f_{p+1}} (x) Omega^q
///          -> E^ (x) Omega^p (x) Omega^q -> 0,   where E^ = dual(E),
/// with f_i = C(m+1,i), e_j = C(n+1,j).
Sequence glued_sequence(const Bundle& e, int p, int q, GluedSide side);

/// Arrow-notation rendering, e.g. "0 -> W(1,0) -> O(-1)^3 -> O(0) -> 0".
std::string to_arrow_notation(const Sequence& s);

/// chi of a term at a twist; multipliers are resolved factor by factor
/// through euler_tensor, and box products multiply.
Integer term_euler(const SequenceTerm& term, const Twist& t);

enum class CompositePolicy { skip, factorwise };

struct ExactnessReport {
  bool exact = false;
  bool skipped = false;
  std::string skip_reason;
  std::size_t points_checked = 0;
  std::vector<std::pair<Twist, Integer>> nonzero_residuals;
};

/// Checks sum_k (-1)^k chi(term_k(t)) = 0 for every t in the grid.
ExactnessReport verify_euler_exactness(const Sequence& s, const TwistGrid& grid,
                                       CompositePolicy policy = CompositePolicy::skip);

/// Default grid [-(n_k+3), n_k+3] on factor k.
TwistGrid default_exactness_grid(const Space& space);

/// One required vanishing H^degree(E(twist) (x) multiplier) together with the
/// line-bundle-twist vanishings that certify it. For chains without a
/// multiplier the certificate is the entry itself.
struct ChainLink {
  int degree = 0;
  Twist twist;
  std::optional<FactorAtom> multiplier;  // on the second factor
  std::vector<CohomologyEntry> certificate;
  std::vector<bool> certificate_in_condition_range;
  bool passes = false;
};

struct VanishingChain {
  std::string name;  // "c.1", "c.2", "d.1", "d.2"
  std::vector<ChainLink> links;
  std::vector<CohomologyEntry> witnesses;
  bool passes = false;
};

struct ChainReport {
  std::vector<int> parameters;
  std::vector<VanishingChain> chains;  // c.1, c.2, d.1, d.2
  bool all_pass = false;
  bool conditions_hold = false;    // conditions (a), (b) of check_thm21
  bool implication_holds = false;  // conditions_hold => all_pass
  std::vector<CohomologyEntry> out_of_range;  // certificate entries outside (a)/(b)
};

ChainReport certify_vanishing_chains(const Bundle& e, int p, int q);

}  // namespace bottcoh
