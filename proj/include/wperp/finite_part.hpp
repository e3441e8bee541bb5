// Classification of the finite part of the reflection-orthogonal subgroup:
// the product of the finite irreducible components of the Coxeter system
// carried by the orthogonal subgroup of x.  The answer is read off the graph
// by a staged case analysis; every hypothesis that is evaluated lands in the
// report's case trace, so a wrong branch is visible rather than silent.
//
// Stages, in order:
//   1. shortcut      whole graph connected, every label finite, group
//                    infinite: the finite part is trivial (the only
//                    connected all-finite-label shapes that escape this are
//                    two infinite chain families, impossible at finite rank);
//   2. in-O          some generator of the finite part lives inside the odd
//                    component O of x (an anchored B-chain, a finite-type
//                    trunk, or an apex pair pinching the component);
//   3. outside-O     a generator crosses into E with a label >= 4 (an
//                    F4-block, a B-chain running into E, or a single 4-edge);
//   4. generic       all remaining generators carry label 2 into E; the
//                    finite part is a product of standard parabolics indexed
//                    by qualifying components of E.
//
// At most one of stages 2-4 produces components; the hypotheses are mutually
// exclusive by construction and the dichotomies behind them are exact, so a
// graph slipping through all stages genuinely has a trivial finite part.

#ifndef WPERP_FINITE_PART_HPP
#define WPERP_FINITE_PART_HPP

#include <optional>
#include <string>
#include <vector>

#include "wperp/graph.hpp"
#include "wperp/presentation.hpp"
#include "wperp/types.hpp"

namespace wperp {

// Partition of the generators relative to the odd component of x:
//   o      the odd component itself;
//   e      generators outside o with a finite label (2 counts) to some
//          member of o -- exactly the generators that can interact with the
//          orthogonal subgroup;
//   rest   generators all of whose labels into o are infinity.
struct OEPartition {
  VertexId x;
  std::vector<VertexId> o, e, rest;  // each sorted

  bool in_o(const VertexId& v) const;
  bool in_e(const VertexId& v) const;
};

OEPartition o_e_partition(const CoxeterGraph& g, const VertexId& x);

// O_k(s): members of o whose label to s is exactly k.
std::vector<VertexId> o_slice(const CoxeterGraph& g, const OEPartition& p,
                              const VertexId& s, Label k);
// Members of o whose label to s is even and finite.
std::vector<VertexId> o_even_slice(const CoxeterGraph& g,
                                   const OEPartition& p, const VertexId& s);
// True iff every member of o has label to s among the given values.
bool o_splits_into(const CoxeterGraph& g, const OEPartition& p,
                   const VertexId& s, const std::vector<Label>& allowed);

// One irreducible factor of the finite part.
enum class FinComponentKind {
  // A single perpendicular reflection; `pair` is its defining edge pair and
  // `root` realizes its root at the queried generator.
  kSingleReflection,
  // A factor isomorphic to the standard parabolic subgroup on `vertices`
  // (a subset of E), generated by one reflection r(base, s) per s.
  kIsoToStandard,
  // The whole orthogonal subgroup of `base` inside the standard parabolic
  // on `vertices`, which is finite and enumerated as a perpendicular
  // presentation.
  kExplicitPerp,
};
std::string to_string(FinComponentKind k);

struct FinComponent {
  FinComponentKind kind = FinComponentKind::kExplicitPerp;
  std::vector<VertexId> vertices;  // defining vertex set, sorted
  EdgePair pair;                   // kSingleReflection only
  RootExpression root;             // kSingleReflection only, at the queried x
  VertexId base;                   // anchor generator of the factor
  // Irreducible types of this factor's group (a perpendicular subgroup may
  // split further, e.g. into commuting reflections).
  std::vector<IrreducibleType> factors;
  std::string provenance;  // dispatcher case that produced the factor
  std::string note;        // transport or side remarks, possibly empty
};

// Product of the factor orders; every reported factor is finite.
long long component_order(const FinComponent& c);

// One evaluated hypothesis: the dispatcher case (or numbered condition), its
// verdict, and optionally why.
struct CaseCheck {
  std::string predicate;
  bool holds = false;
  std::string note;
};

struct FinitePartReport {
  VertexId x;
  OEPartition partition;
  std::vector<FinComponent> components;  // empty = trivial finite part
  // Edge pairs whose generators land in some component; closed under the
  // pair classes of the presentation, so this is a union of classes.
  std::vector<EdgePair> efin;
  std::vector<CaseCheck> case_trace;

  bool trivial() const { return components.empty(); }
};

struct FinitePartOptions {
  // Stage 1 above.  Turning it off forces the staged pipeline even on
  // connected all-finite-label graphs; used to cross-test the two routes.
  bool use_two_spherical_shortcut = true;
};

// Stage 2: generators inside the odd component.  Returns the full component
// list when one of its three hypotheses holds, nullopt otherwise (which
// certifies that no finite-part generator lives inside O).  Appends every
// verdict to `trace`.
std::optional<std::vector<FinComponent>> finite_part_in_o(
    const CoxeterGraph& g, const VertexId& x, const OEPartition& p,
    std::vector<CaseCheck>& trace);

// Stage 3: a generator crossing into E with an even label >= 4.  Requires
// that stage 2 declined.
std::optional<std::vector<FinComponent>> finite_part_non_o(
    const CoxeterGraph& g, const VertexId& x, const OEPartition& p,
    std::vector<CaseCheck>& trace);

// Stage 4 families: qualifying components of E, with the chosen base vertex
// (the least common label-2 partner in O).
struct FamilyChoice {
  std::vector<VertexId> members;  // one irreducible component of E, sorted
  VertexId base;                  // y in O with label 2 to every member
};
struct GeneralFamilies {
  std::vector<FamilyChoice> k1;  // components all of whose labels into O are 2 or infinity
  std::vector<FamilyChoice> k2;  // singletons carrying some label 4 into O
};
GeneralFamilies general_families(const CoxeterGraph& g, const VertexId& x,
                                 const OEPartition& p,
                                 std::vector<CaseCheck>* trace = nullptr);

// The dispatcher.  Never fails on well-formed input; internal contradictions
// (a stage firing that an earlier stage should have absorbed) throw Error,
// since they signal an implementation bug rather than a bad graph.
FinitePartReport finite_part(const CoxeterGraph& g, const VertexId& x,
                             const FinitePartOptions& opts = {});

}  // namespace wperp

#endif  // WPERP_FINITE_PART_HPP
