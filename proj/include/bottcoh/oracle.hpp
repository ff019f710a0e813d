#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "bottcoh/cohomology.hpp"
#include "bottcoh/integer.hpp"

// Brute-force cohomology of Omega^p(l) on P^n that never touches the Bott
// closed form: h^0 comes from the kernel of an explicit Koszul matrix and the
// higher groups from the long exact sequences of
//   0 -> Omega^p(l) -> O(l-p)^{C(n+1,p)} -> Omega^{p-1}(l) -> 0.
namespace bottcoh::oracle {

using Monomial = std::vector<int>;

/// Exponent vectors of degree `degree` in `nvars` variables, graded-lex
/// (descending in x_0, then x_1, ...).
std::vector<Monomial> monomials(int nvars, int degree);

/// Sparse integer matrix stored by rows.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::map<std::size_t, Integer>> entries;  // one map per row
};

/// Rank over Q by fraction-free sparse row elimination.
std::size_t exact_rank(const SparseMatrix& m);

/// Koszul contraction H^0(O(degree))^{C(n+1,p)} -> H^0(O(degree+1))^{C(n+1,p-1)}
/// on P^n, in the basis (exterior subset, monomial) with subsets in lex order
/// and monomials graded-lex.
SparseMatrix koszul_matrix(int n, int p, int degree);

/// h^0(P^n, O(k)) by monomial enumeration.
Integer line_h0(int n, int k);
/// h^n(P^n, O(k)) by enumerating Cech monomials with every exponent <= -1.
Integer line_htop(int n, int k);

CohomologyVector oracle_cohomology(int n, int p, int l);

}  // namespace bottcoh::oracle
