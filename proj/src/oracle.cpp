#include "bottcoh/oracle.hpp"

#include <utility>



#include "bottcoh/bundle.hpp"

namespace bottcoh::oracle {

namespace {

void monomials_rec(int var, int nvars, int remaining, Monomial& cur,
                   std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = e;
    monomials_rec(var + 1, nvars, remaining - e, cur, out);
  }
}

// Subsets of {0..n} of size k in lexicographic order.
std::vector<std::vector<int>> subsets(int n_elems, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n_elems) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n_elems - k + i) --i;
    if (i < 0) return out;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

using Row = std::map<std::size_t, Integer>;

void remove_content(Row& r) {
  Integer g = 0;
  for (const auto& [c, v] : r) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(v));
  if (g > 1)
    for (auto& [c, v] : r) v /= g;
}

// r := b*r - a*pivot, where a = r[lead], b = pivot[lead].
void eliminate(Row& r, const Row& pivot, std::size_t lead) {
  Integer a = r.at(lead);
  const Integer& b = pivot.at(lead);
  for (auto& [c, v] : r) v *= b;
  for (const auto& [c, v] : pivot) {
    auto& slot = r[c];
    slot -= a * v;
  }
  for (auto it = r.begin(); it != r.end();) {
    if (it->second == 0)
      it = r.erase(it);
    else
      ++it;
  }
  remove_content(r);
}

}  // namespace

std::vector<Monomial> monomials(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || nvars < 1) return out;
  Monomial cur(nvars);
  monomials_rec(0, nvars, degree, cur, out);
  return out;
}

std::size_t exact_rank(const SparseMatrix& m) {
  std::map<std::size_t, Row> pivots;  // keyed by leading column
  for (Row r : m.entries) {
    while (!r.empty()) {
      std::size_t lead = r.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        remove_content(r);
        pivots.emplace(lead, std::move(r));
        break;
      }
      eliminate(r, it->second, lead);
    }
  }
  return pivots.size();
}

SparseMatrix koszul_matrix(int n, int p, int degree) {
  const int nvars = n + 1;
  auto src_mons = monomials(nvars, degree);
  auto dst_mons = monomials(nvars, degree + 1);
  auto src_sets = subsets(nvars, p);
  auto dst_sets = subsets(nvars, p - 1);

  std::map<Monomial, std::size_t> dst_mon_index;
  for (std::size_t i = 0; i < dst_mons.size(); ++i) dst_mon_index[dst_mons[i]] = i;
  std::map<std::vector<int>, std::size_t> dst_set_index;
  for (std::size_t i = 0; i < dst_sets.size(); ++i) dst_set_index[dst_sets[i]] = i;

  SparseMatrix m;
  m.cols = src_sets.size() * src_mons.size();
  m.rows = dst_sets.size() * dst_mons.size();
  m.entries.resize(m.rows);

  for (std::size_t s = 0; s < src_sets.size(); ++s) {
    const auto& subset = src_sets[s];
    for (std::size_t mi = 0; mi < src_mons.size(); ++mi) {
      std::size_t col = s * src_mons.size() + mi;
      // x^a e_{i_0..i_{p-1}} -> sum_k (-1)^k x^{a + e_{i_k}} e_{I \ i_k}
      for (int k = 0; k < p; ++k) {
        Monomial mono = src_mons[mi];
        ++mono[subset[k]];
        std::vector<int> rest;
        for (int j = 0; j < p; ++j)
          if (j != k) rest.push_back(subset[j]);
        std::size_t row = dst_set_index.at(rest) * dst_mons.size() + dst_mon_index.at(mono);
        m.entries[row][col] += (k % 2 == 0) ? 1 : -1;
      }
    }
  }
  return m;
}

Integer line_h0(int n, int k) { return Integer(monomials(n + 1, k).size()); }

Integer line_htop(int n, int k) {
  // x^a with a_i <= -1 and sum a_i = k  <->  b_i = -a_i - 1 >= 0, sum b_i = -k-n-1.
  return Integer(monomials(n + 1, -k - n - 1).size());
}

namespace {

CohomologyVector line_vector(int n, int k) {
  CohomologyVector v{std::vector<Integer>(n + 1)};
  v.dims[0] = line_h0(n, k);
  v.dims[n] += line_htop(n, k);
  return v;
}

}  // namespace

CohomologyVector oracle_cohomology(int n, int p, int l) {
  if (n < 1 || p < 0 || p > n)
    throw InputError("oracle index out of range: n=" + std::to_string(n) +
                     " p=" + std::to_string(p));
  if (n == 1) return line_vector(1, p == 0 ? l : l - 2);

  CohomologyVector prev = line_vector(n, l);
  for (int r = 1; r <= p; ++r) {
    const Integer copies = binomial(n + 1, r);
    const int degree = l - r;
    Integer h0 = 0;
    if (degree >= 0) {
      SparseMatrix m = koszul_matrix(n, r, degree);
      h0 = Integer(m.cols - exact_rank(m));
    }
    CohomologyVector cur{std::vector<Integer>(n + 1)};
    cur.dims[0] = h0;
    cur.dims[1] = prev.dims[0] - copies * line_h0(n, degree) + h0;
    for (int i = 2; i <= n - 1; ++i) cur.dims[i] = prev.dims[i - 1];
    cur.dims[n] = prev.dims[n - 1] + copies * line_htop(n, degree) - prev.dims[n];
    prev = std::move(cur);
  }
  return prev;
}

}  // namespace bottcoh::oracle
