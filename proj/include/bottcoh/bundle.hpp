#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bottcoh/integer.hpp"

namespace bottcoh {

/// Raised for every malformed input: bad bundle text, out-of-range indices,
/// arity mismatches. The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A product of one or two projective spaces, P^{n_1} or P^{n_1} x P^{n_2}.
class Space {
 public:
  explicit Space(std::vector<int> dims);

  std::size_t factor_count() const { return dims_.size(); }
  int dim(std::size_t k) const { return dims_.at(k); }
  int total_dim() const;
  const std::vector<int>& dims() const { return dims_; }

  bool operator==(const Space&) const = default;

 private:
  std::vector<int> dims_;
};

/// One integer per factor of a Space.
using Twist = std::vector<int>;

/// Omega^p(l) on a single projective factor; p = 0 is the line bundle O(l).
struct FactorAtom {
  int p = 0;
  int l = 0;

  auto operator<=>(const FactorAtom&) const = default;
};

/// Validates 0 <= p <= n and folds Omega^n(l) into O(l - n - 1).
FactorAtom canonical(FactorAtom a, int n);

/// (Omega^p(l))^dual = Omega^{n-p}(n + 1 - l), canonicalized.
FactorAtom dual(FactorAtom a, int n);

/// Rank C(n, p) of Omega^p on P^n.
Integer factor_rank(FactorAtom a, int n);

/// A box product of factor atoms, with multiplicity.
struct Atom {
  std::vector<FactorAtom> factors;
  std::int64_t mult = 1;

  bool operator==(const Atom&) const = default;
};

/// An element of the Bott class: a direct sum of atoms on a fixed space.
///
/// The constructor canonicalizes every factor, sorts atoms lexicographically
/// on their factor lists and merges equal atoms by adding multiplicities, so
/// two Bundles denote the same sheaf exactly when they compare equal.
class Bundle {
 public:
  Bundle(Space space, std::vector<Atom> atoms);

  const Space& space() const { return space_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  bool operator==(const Bundle&) const = default;

 private:
  Space space_;
  std::vector<Atom> atoms_;
};

/// Single-atom bundle of multiplicity 1.
Bundle make_atom_bundle(const Space& space, std::vector<FactorAtom> factors);

/// Omega^{p_1} x ... x Omega^{p_k} (untwisted) as a canonical atom.
Atom omega_atom(const Space& space, const std::vector<int>& exterior);

Integer atom_rank(const Space& space, const Atom& atom);
Integer rank(const Bundle& e);

Bundle twist(const Bundle& e, const Twist& t);
Bundle dual(const Bundle& e);
Bundle direct_sum(const Bundle& e, const Bundle& f);

/// True iff `a` (canonical, multiplicity 1) is one of the atoms of `e`.
bool contains_summand(const Bundle& e, const Atom& a);

void check_twist_arity(const Space& space, const Twist& t);

}  // namespace bottcoh
