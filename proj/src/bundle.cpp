#include "bottcoh/bundle.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace bottcoh {

Space::Space(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty() || dims_.size() > 2)
    throw InputError("space must have 1 or 2 projective factors, got " +
                     std::to_string(dims_.size()));
  for (int n : dims_)
    if (n < 1)
      throw InputError("projective factor dimension must be >= 1, got " +
                       std::to_string(n));
}

int Space::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), 0);
}

FactorAtom canonical(FactorAtom a, int n) {
  if (a.p < 0 || a.p > n)
    throw InputError("exterior index p=" + std::to_string(a.p) +
                     " out of range for P^" + std::to_string(n));
  if (a.p == n) return {0, a.l - n - 1};
  return a;
}

FactorAtom dual(FactorAtom a, int n) {
  a = canonical(a, n);
  return canonical({n - a.p, n + 1 - a.l}, n);
}

Integer factor_rank(FactorAtom a, int n) { return binomial(n, a.p); }

namespace {

void check_atom(const Space& space, const Atom& a) {
  if (a.factors.size() != space.factor_count())
    throw InputError("summand has " + std::to_string(a.factors.size()) +
                     " factors but the space has " +
                     std::to_string(space.factor_count()));
  if (a.mult < 1)
    throw InputError("multiplicity must be positive, got " +
                     std::to_string(a.mult));
}

}  // namespace

Bundle::Bundle(Space space, std::vector<Atom> atoms)
    : space_(std::move(space)) {
  if (atoms.empty()) throw InputError("bundle must have at least one summand");
  for (auto& a : atoms) {
    check_atom(space_, a);
    for (std::size_t k = 0; k < a.factors.size(); ++k)
      a.factors[k] = canonical(a.factors[k], space_.dim(k));
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& x, const Atom& y) { return x.factors < y.factors; });
  for (auto& a : atoms) {
    if (!atoms_.empty() && atoms_.back().factors == a.factors)
      atoms_.back().mult += a.mult;
    else
      atoms_.push_back(std::move(a));
  }
}

Bundle make_atom_bundle(const Space& space, std::vector<FactorAtom> factors) {
  return Bundle(space, {Atom{std::move(factors), 1}});
}

Atom omega_atom(const Space& space, const std::vector<int>& exterior) {
  if (exterior.size() != space.factor_count())
    throw InputError("exterior index count does not match the space");
  Atom a;
  for (std::size_t k = 0; k < exterior.size(); ++k)
    a.factors.push_back(canonical({exterior[k], 0}, space.dim(k)));
  return a;
}

Integer atom_rank(const Space& space, const Atom& atom) {
  Integer r = 1;
  for (std::size_t k = 0; k < atom.factors.size(); ++k)
    r *= factor_rank(atom.factors[k], space.dim(k));
  return r;
}

Integer rank(const Bundle& e) {
  Integer r = 0;
  for (const auto& a : e.atoms()) r += a.mult * atom_rank(e.space(), a);
  return r;
}

void check_twist_arity(const Space& space, const Twist& t) {
  if (t.size() != space.factor_count())
    throw InputError("twist has " + std::to_string(t.size()) +
                     " entries but the space has " +
                     std::to_string(space.factor_count()) + " factors");
}

Bundle twist(const Bundle& e, const Twist& t) {
  check_twist_arity(e.space(), t);
  std::vector<Atom> atoms = e.atoms();
  for (auto& a : atoms)
    for (std::size_t k = 0; k < t.size(); ++k) a.factors[k].l += t[k];
  return Bundle(e.space(), std::move(atoms));
}

Bundle dual(const Bundle& e) {
  std::vector<Atom> atoms = e.atoms();
  for (auto& a : atoms)
    for (std::size_t k = 0; k < a.factors.size(); ++k)
      a.factors[k] = dual(a.factors[k], e.space().dim(k));
  return Bundle(e.space(), std::move(atoms));
}

Bundle direct_sum(const Bundle& e, const Bundle& f) {
  if (!(e.space() == f.space()))
    throw InputError("direct sum of bundles on different spaces");
  std::vector<Atom> atoms = e.atoms();
  atoms.insert(atoms.end(), f.atoms().begin(), f.atoms().end());
  return Bundle(e.space(), std::move(atoms));
}

bool contains_summand(const Bundle& e, const Atom& a) {
  if (a.factors.size() != e.space().factor_count())
    throw InputError("summand factor count does not match the bundle's space");
  std::vector<FactorAtom> want = a.factors;
  for (std::size_t k = 0; k < want.size(); ++k)
    want[k] = canonical(want[k], e.space().dim(k));
  return std::any_of(e.atoms().begin(), e.atoms().end(),
                     [&](const Atom& x) { return x.factors == want; });
}

}  // namespace bottcoh
