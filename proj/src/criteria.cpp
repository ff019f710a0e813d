#include "bottcoh/criteria.hpp"

namespace bottcoh {

namespace {

void require_factors(const Bundle& e, std::size_t count, const char* what) {
  if (e.space().factor_count() != count)
    throw InputError(std::string(what) + " needs a space with " + std::to_string(count) +
                     (count == 1 ? " factor" : " factors"));
}

CohomologyEntry evaluate(const Bundle& e, int degree, const Twist& t) {
  return {degree, t, cohomology(e, t).dims.at(degree)};
}

void finish(CriterionReport& r, const Bundle& e, const Atom& expected) {
  for (const auto* cond : {&r.condition_a, &r.condition_b})
    for (const auto& entry : *cond)
      if (!entry.vanishes()) r.witnesses.push_back(entry);
  r.criterion_met = r.hypothesis.dim > 0 && r.witnesses.empty();
  r.conclusion_verified = contains_summand(e, expected);
}

}  // namespace

std::vector<std::pair<int, Twist>> thm21_condition_a(int m, int n, int p, int q) {
  (void)m;
  (void)n;
  std::vector<std::pair<int, Twist>> out;
  for (int i = 1; i <= p + q; ++i)
    for (int a = 0; a <= p; ++a) {
      int b = p + q + 1 - i - a;
      if (b >= 0 && b <= q) out.push_back({i, {a, b}});
    }
  return out;
}

std::vector<std::pair<int, Twist>> thm21_condition_b(int m, int n, int p, int q) {
  std::vector<std::pair<int, Twist>> out;
  for (int i = p + q; i <= m + n - 1; ++i)
    for (int a = p - m; a <= 0; ++a) {
      int b = p + q - 1 - i - a;
      if (b >= q - n && b <= 0) out.push_back({i, {a, b}});
    }
  return out;
}

CriterionReport check_prop13(const Bundle& e, int p) {
  require_factors(e, 1, "prop13");
  const int n = e.space().dim(0);
  if (p < 1 || p > n - 1)
    throw InputError("prop13 needs 1 <= p <= n-1, got p=" + std::to_string(p) +
                     " on P^" + std::to_string(n));
  CriterionReport r;
  r.criterion_id = "prop13";
  r.parameters = {p};
  r.hypothesis = evaluate(e, p, {0});
  for (int i = 1; i <= p; ++i) r.condition_a.push_back(evaluate(e, i, {p - i + 1}));
  for (int i = p; i <= n - 1; ++i) r.condition_b.push_back(evaluate(e, i, {p - i - 1}));
  finish(r, e, omega_atom(e.space(), {p}));
  return r;
}

CriterionReport check_thm21(const Bundle& e, int p, int q) {
  require_factors(e, 2, "thm21");
  const int m = e.space().dim(0);
  const int n = e.space().dim(1);
  if (p < 1 || p > m - 1 || q < 1 || q > n - 1)
    throw InputError("thm21 needs 1 <= p <= m-1 and 1 <= q <= n-1, got p=" +
                     std::to_string(p) + " q=" + std::to_string(q) + " on P^" +
                     std::to_string(m) + "xP^" + std::to_string(n));
  CriterionReport r;
  r.criterion_id = "thm21";
  r.parameters = {p, q};
  r.hypothesis = evaluate(e, p + q, {0, 0});
  for (auto& [i, t] : thm21_condition_a(m, n, p, q)) r.condition_a.push_back(evaluate(e, i, t));
  for (auto& [i, t] : thm21_condition_b(m, n, p, q)) r.condition_b.push_back(evaluate(e, i, t));
  finish(r, e, omega_atom(e.space(), {p, q}));
  return r;
}

SVReport check_sv(const Bundle& e) {
  require_factors(e, 1, "sv");
  const int n = e.space().dim(0);
  SVReport r;
  // Omega^p(l), 0 < p < n, has h^p(Omega^p(l)(t)) != 0 exactly at t = -l.
  for (const auto& atom : e.atoms()) {
    const auto& f = atom.factors[0];
    if (f.p > 0 && f.p < n) r.support.insert({f.p, -f.l});
  }
  for (const auto& x : r.support)
    for (const auto& y : r.support)
      if (x.degree >= y.degree && x.degree + x.twist + 1 == y.degree + y.twist)
        r.violating_pairs.push_back({x, y});
  r.passes = r.violating_pairs.empty();
  return r;
}

std::set<SupportPair> sweep_support(const Bundle& e, int lo, int hi) {
  require_factors(e, 1, "sv");
  const int n = e.space().dim(0);
  std::set<SupportPair> out;
  for (int t = lo; t <= hi; ++t) {
    auto h = cohomology(e, {t});
    for (int i = 1; i <= n - 1; ++i)
      if (h.dims[i] != 0) out.insert({i, t});
  }
  return out;
}

AcmVerdict is_acm(const Bundle& e) {
  require_factors(e, 1, "acm");
  for (const auto& atom : e.atoms())
    if (atom.factors[0].p != 0)
      return {false, "not ACM: has intermediate cohomology, so it is not a sum of line bundles"};
  return {true, "ACM: splits as a direct sum of line bundles (Horrocks)"};
}

}  // namespace bottcoh
