// Numeric root-system engine used to cross-validate the combinatorial
// results.  Everything here works in the geometric representation: simple
// roots are the standard basis, the symmetric bilinear form B has
// B(alpha_s, alpha_t) = -cos(pi / m(s,t)) (-1 for an infinite label), and a
// generator acts by  s . v = v - 2 B(alpha_s, v) alpha_s.
//
// For a finite group the whole root system and the whole group are
// enumerated explicitly; group elements are stored as signed permutations of
// the positive roots, so once the generators' actions have been matched
// numerically all further composition is exact integer arithmetic.  Caps on
// the closures turn a diverging enumeration into CapExceeded instead of an
// endless loop; infinite groups are probed at the level of individual roots
// (apply_word + the form) rather than by enumeration.

#ifndef WPERP_ORACLE_HPP
#define WPERP_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "wperp/graph.hpp"

namespace wperp {

using RootVector = Eigen::VectorXd;
using FormMatrix = Eigen::MatrixXd;

// Comparison tolerance for form values and root coordinates.
inline constexpr double kZeroTol = 1e-8;
// Grid step used to key root vectors for exact-match lookup.
inline constexpr double kGridStep = 1e-6;

// Matrix of the bilinear form in the simple-root basis (ordered as
// g.vertices()).  Off-diagonal entries for label 2 are exactly 0.
FormMatrix geometric_form(const CoxeterGraph& g);

RootVector simple_root(int n, int i);

// One generator applied to a vector in simple-root coordinates.
RootVector apply_simple_reflection(const FormMatrix& B, int i,
                                   const RootVector& v);

// A word acts with its rightmost letter first (function composition order).
RootVector apply_word(const FormMatrix& B, const std::vector<int>& word,
                      RootVector v);

// Positive half of the root system, enumerated by closure from the simple
// roots.  positives[i] = alpha_i for i < rank; order after that is the
// breadth-first discovery order, so it is a deterministic function of the
// form matrix.
struct RootSystem {
  std::vector<RootVector> positives;
  bool complete = false;  // false iff the cap stopped the closure

  // Index and sign of the positive root matching v: (index, +1) if v is a
  // positive root, (index, -1) if -v is; nullopt if neither is known.
  std::optional<std::pair<int, int>> locate(const RootVector& v) const;

  int count() const { return static_cast<int>(positives.size()); }

 private:
  friend RootSystem enumerate_roots(const FormMatrix&, int);
  std::map<std::vector<long long>, int> index_;  // grid key -> position
};

RootSystem enumerate_roots(const FormMatrix& B, int cap = 20000);

// Group element as a signed permutation of the positive roots:
// act[j] = s * (k + 1)  means  w . beta_j = s * beta_k  with s = +-1.
struct SignedPerm {
  std::vector<int32_t> act;
  std::vector<int> word;  // one witnessing word in the simple generators

  bool operator==(const SignedPerm& o) const { return act == o.act; }
};

SignedPerm identity_perm(int n_roots);
// (a * b)(r) = a(b(r)); the word concatenates as word(a) ++ word(b).
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);

// Explicit list of a finite reflection group.  elements[0] is the identity
// and the order of the rest is the breadth-first closure order.
struct FiniteGroup {
  RootSystem roots;
  std::vector<SignedPerm> simple_refl;  // one per generator
  std::vector<SignedPerm> elements;

  long long order() const { return static_cast<long long>(elements.size()); }
  // Index of an element with this action, or -1.
  int find(const SignedPerm& p) const;

 private:
  friend FiniteGroup enumerate_group(const CoxeterGraph&, int, int);
  std::map<std::vector<int32_t>, int> index_;
};

// Throws CapExceeded if either closure overruns its cap (in particular for
// every infinite group).
FiniteGroup enumerate_group(const CoxeterGraph& g, int root_cap = 20000,
                            int group_cap = 200000);

// Reflection in the positive root beta_j as a signed permutation.
SignedPerm root_reflection(const FormMatrix& B, const RootSystem& rs, int j);

// Indices of the positive roots orthogonal to beta_{x_index} under B.
std::vector<int> perp_positive_roots(const FormMatrix& B,
                                     const RootSystem& rs, int x_index);

// The canonical generators of the subsystem spanned by `perp`: beta is kept
// iff its reflection maps every other member of `perp` to a positive root.
std::vector<int> canonical_perp_simples(const FormMatrix& B,
                                        const RootSystem& rs,
                                        const std::vector<int>& perp);

// Members of `perp` that are visibly non-simple because they decompose as a
// positive combination of two other members.  This is a one-sided check
// (roots with longer decompositions are not detected); it must always be a
// subset of the complement of canonical_perp_simples.
std::vector<int> two_summand_nonsimples(const FormMatrix& B,
                                        const RootSystem& rs,
                                        const std::vector<int>& perp);

// Order of the product of the reflections in two unit roots with inner
// product ip, assuming they are canonical generators of the dihedral group
// they span: ip = -cos(pi/m) -> m, ip <= -1 -> infinity.  Values that match
// neither to 1e-8 (m up to 360) raise NumericAmbiguity.
Label order_from_inner_product(double ip);

// Pairwise product orders of a list of unit roots via the rule above.
std::vector<std::vector<Label>> pairwise_orders(
    const FormMatrix& B, const std::vector<RootVector>& roots);

// Order of the subgroup generated by `gens` (closure capped like the group).
long long subgroup_order(int n_roots, const std::vector<SignedPerm>& gens,
                         int cap = 200000);

// Number of group elements sending alpha_x to +-alpha_x.
long long centralizer_order_of_generator(const FiniteGroup& G, int x_index);

// Consistency probe: every positive root's reflection must be a distinct
// group element, and there must be exactly roots.count() of them.
bool reflection_count_matches(const FormMatrix& B, const FiniteGroup& G);

}  // namespace wperp

#endif  // WPERP_ORACLE_HPP
