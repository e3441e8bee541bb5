// Combinatorial construction of the reflection-orthogonal subgroup of a
// generator x: the group generated by all reflections that commute with x
// elementwise-orthogonally, i.e. whose roots are perpendicular to alpha_x.
//
// Everything is read off the Coxeter graph:
//   - generators are indexed by "edge pairs" (y, s): y in the odd component
//     O of x and m(y, s) even and finite; the associated root is the
//     perpendicular root of the dihedral on {y, s}, transported from y to x
//     along odd paths;
//   - two pairs give the same reflection, or a product of known finite
//     order, exactly when the graph contains one of seven local label
//     patterns around them;
//   - a class of pairs has a well-defined root independent of the
//     transport route when its certificate below holds.  If every class is
//     certified, the classes with the derived order matrix are a Coxeter
//     presentation of the orthogonal subgroup, and the output is marked
//     supported.

#ifndef WPERP_PRESENTATION_HPP
#define WPERP_PRESENTATION_HPP

#include <string>
#include <vector>

#include "wperp/graph.hpp"
#include "wperp/oracle.hpp"

namespace wperp {

// Ordered pair (y, s): y in the odd component of x, s any other generator,
// m(y, s) even and finite.  One generator candidate r(y, s) per pair.
struct EdgePair {
  VertexId y, s;
  friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

std::vector<EdgePair> edge_pairs(const CoxeterGraph& g, const VertexId& x);

// The seven local label patterns that force a relation between two pairs.
// Anchor = the first coordinate of a pair.  "chord" refers to the label
// between the two second coordinates.
enum class PatternKind {
  kAnchorBothTwo,     // (y,s),(y,t), both labels 2: product order m(s,t)
  kAnchorEvenCommute, // (y,s),(y,t), labels {2, even>=4}, chord 2: order 2
  kAnchorFourChord,   // (y,s),(y,t), labels {2,4}, chord 3: order 4
  kOddStep,           // (y,s),(z,s), m(y,z) odd, both labels 2: equal
  kSwapThreeThree,    // (y,s),(s,y) via y' with labels 3,3: equal
  kSwapThreeFive,     // (y,s),(s,y) via y' with labels {3,5}: order 2
  kFourStep,          // (y,s),(z,s), m(y,z)=3, labels {2,4}: order 2
};
std::string to_string(PatternKind k);

struct RelationInstance {
  EdgePair left, right;     // left < right lexicographically
  Label k;                  // claimed product order; finite(1) = equality
  PatternKind pattern;
  std::vector<VertexId> q;  // witness path from left.y to right.y
};

// All relation instances among the pairs of x, each emitted once,
// deterministically ordered.
std::vector<RelationInstance> relation_instances(const CoxeterGraph& g,
                                                 const VertexId& x);

struct PairClass {
  std::vector<EdgePair> members;  // sorted; members[0] is the representative
  bool uniform_root_certified = false;
  const EdgePair& representative() const { return members.front(); }
};

struct PerpPresentation {
  VertexId x;
  std::vector<VertexId> odd_component;      // O, sorted
  std::vector<EdgePair> pairs;              // sorted
  std::vector<RelationInstance> instances;
  std::vector<PairClass> classes;           // ordered by representative
  // Class-level Coxeter matrix: finite(1) on the diagonal, infinity where no
  // finite product order is forced.
  std::vector<std::vector<Label>> orders;
  int y_rank = 0;           // cycle rank of the odd component
  bool supported = false;   // every class certified
};

// Throws InconsistentOrders if the pattern scan contradicts itself (a
// finite order >= 2 within one class, or two different finite orders for
// the same class pair); that signals an implementation bug, not bad input.
PerpPresentation perp_presentation(const CoxeterGraph& g, const VertexId& x);

// Index of the class containing `pair`, or -1.
int class_index_of(const PerpPresentation& p, const EdgePair& pair);

// Certificate that every member of a class realizes the same root with the
// trivial transport route: the odd component of x is acyclic, or some
// member (y, s) with m(y, s) = 2 reaches every cycle vertex by odd paths
// inside {z in O : m(z, s) = 2}.
bool certify_uniform_root(const CoxeterGraph& g, const VertexId& x,
                          const std::vector<EdgePair>& members);

// --- root realizations ---------------------------------------------------

// A root written as a generator word applied to one simple root; the
// rightmost letter of `word` acts first.
struct RootExpression {
  std::vector<VertexId> word;
  VertexId base;
};

// The root orthogonal to alpha_y inside the dihedral on {y, s}, m(y, s)
// even: the empty word on alpha_s for m = 2, otherwise the alternating
// word (s, y, s, ...) of length (m - 2) / 2 on alpha_s or alpha_y.
RootExpression dihedral_perp_root(const CoxeterGraph& g, const EdgePair& p);

// Transport word along the tree path root -> y: per step a -> b the
// alternating segment (b, a, b, ...) of length m(a, b) - 1, concatenated in
// path order.
std::vector<VertexId> transport_word(const CoxeterGraph& g,
                                     const TreeOrder& tree, const VertexId& y);

// gamma(x; y, s) = transport word of y  ++  dihedral root of (y, s), along
// the canonical odd spanning tree rooted at x.
RootExpression root_expression(const CoxeterGraph& g, const VertexId& x,
                               const EdgePair& p);

RootVector evaluate(const CoxeterGraph& g, const FormMatrix& B,
                    const RootExpression& e);

RootVector gamma_root(const CoxeterGraph& g, const FormMatrix& B,
                      const VertexId& x, const EdgePair& p);

}  // namespace wperp

#endif  // WPERP_PRESENTATION_HPP
