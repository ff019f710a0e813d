#include "bottcoh/cohomology.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace bottcoh {

Integer CohomologyVector::euler() const {
  Integer chi = 0;
  for (std::size_t i = 0; i < dims.size(); ++i)
    chi += (i % 2 == 0) ? dims[i] : Integer(-dims[i]);
  return chi;
}

Integer bott_dim(int n, int p, int l, int i) {
  if (n < 1 || p < 0 || p > n || i < 0 || i > n)
    throw InputError("bott_dim index out of range: n=" + std::to_string(n) +
                     " p=" + std::to_string(p) + " i=" + std::to_string(i));
  if (i == 0 && l > p) return binomial(l + n - p, n - p) * binomial(l - 1, p);
  if (l == 0 && i == p) return 1;
  if (i == n && l < p - n) return binomial(-l + p, p) * binomial(-l - 1, n - p);
  return 0;
}

const std::vector<Integer>& factor_cohomology(int n, int p, int l) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::vector<Integer>> cache;

  std::lock_guard lock(mutex);
  auto key = std::make_tuple(n, p, l);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Integer> dims(n + 1);
  for (int i = 0; i <= n; ++i) dims[i] = bott_dim(n, p, l, i);
  return cache.emplace(key, std::move(dims)).first->second;
}

CohomologyVector cohomology(const Bundle& e, const Twist& t) {
  const Space& space = e.space();
  check_twist_arity(space, t);
  CohomologyVector out{std::vector<Integer>(space.total_dim() + 1)};
  for (const auto& atom : e.atoms()) {
    // Kunneth: convolve the per-factor vectors.
    std::vector<Integer> acc{1};
    for (std::size_t k = 0; k < space.factor_count(); ++k) {
      const auto& f = atom.factors[k];
      const auto& h = factor_cohomology(space.dim(k), f.p, f.l + t[k]);
      std::vector<Integer> next(acc.size() + h.size() - 1);
      for (std::size_t i = 0; i < acc.size(); ++i) {
        if (acc[i] == 0) continue;
        for (std::size_t j = 0; j < h.size(); ++j)
          if (h[j] != 0) next[i + j] += acc[i] * h[j];
      }
      acc = std::move(next);
    }
    for (std::size_t i = 0; i < acc.size(); ++i) out.dims[i] += atom.mult * acc[i];
  }
  return out;
}

Integer euler(const Bundle& e, const Twist& t) { return cohomology(e, t).euler(); }

Integer factor_euler(int n, FactorAtom a) {
  a = canonical(a, n);
  const auto& h = factor_cohomology(n, a.p, a.l);
  Integer chi = 0;
  for (std::size_t i = 0; i < h.size(); ++i) chi += (i % 2 == 0) ? h[i] : Integer(-h[i]);
  return chi;
}

std::vector<ResolutionTerm> line_bundle_resolution(int n, FactorAtom w) {
  w = canonical(w, n);
  if (w.p == 0) return {{0, w.l, 1}};
  std::vector<ResolutionTerm> terms;
  for (int k = w.p + 1; k <= n + 1; ++k)
    terms.push_back({k - w.p - 1, w.l - k, binomial(n + 1, k)});
  return terms;
}

Integer euler_tensor(int n, FactorAtom a, FactorAtom w, int l) {
  a = canonical(a, n);
  Integer chi = 0;
  for (const auto& term : line_bundle_resolution(n, w)) {
    Integer value = term.multiplicity * factor_euler(n, {a.p, a.l + term.twist + l});
    chi += (term.position % 2 == 0) ? value : Integer(-value);
  }
  return chi;
}

std::vector<Twist> TwistGrid::points() const {
  for (const auto& [lo, hi] : ranges)
    if (lo > hi) throw InputError("empty twist range");
  if (ranges.empty()) throw InputError("twist grid has no ranges");
  std::vector<Twist> out;
  Twist cur;
  for (const auto& r : ranges) cur.push_back(r.first);
  while (true) {
    out.push_back(cur);
    std::size_t k = cur.size();
    while (k > 0) {
      --k;
      if (cur[k] < ranges[k].second) {
        ++cur[k];
        break;
      }
      cur[k] = ranges[k].first;
      if (k == 0) return out;
    }
  }
}

CohomologyTable table(const Bundle& e, const TwistGrid& grid) {
  if (grid.ranges.size() != e.space().factor_count())
    throw InputError("grid arity does not match the space");
  CohomologyTable out{grid, {}};
  for (auto& t : grid.points()) out.entries.emplace_back(t, cohomology(e, t));
  return out;
}

}  // namespace bottcoh
