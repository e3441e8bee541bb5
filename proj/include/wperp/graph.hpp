// Coxeter-graph data model and the graph/poset utilities the rest of the
// library is built on: the odd subgraph, cycle structure, tree decompositions
// around a core, and tree orders.
//
// Conventions used throughout:
//   - a pair of distinct vertices with no stored label has label 2 (the usual
//     drawing convention: edges are drawn only for labels >= 3 or infinity);
//   - m(s,s) = 1 implicitly;
//   - every tie is broken by the lexicographic order on vertex names, so all
//     derived structures (components, spanning trees, paths) are
//     deterministic functions of the graph alone.

#ifndef WPERP_GRAPH_HPP
#define WPERP_GRAPH_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "wperp/error.hpp"

namespace wperp {

using VertexId = std::string;

// Order of the product of two generators: an integer >= 1 or infinity.
// Infinity is a distinct value of this type, not a sentinel integer; it
// compares greater than every finite order and serializes as "inf".
class Label {
 public:
  constexpr Label() : m_(2) {}

  static constexpr Label finite(int m) { return Label(m); }
  static constexpr Label infinity() { return Label(0); }

  constexpr bool is_infinite() const { return m_ == 0; }
  constexpr bool is_finite() const { return m_ != 0; }
  // Value of a finite label; must not be called on infinity.
  int finite_value() const;

  constexpr bool is_even() const { return is_finite() && m_ % 2 == 0; }
  constexpr bool is_odd() const { return is_finite() && m_ % 2 == 1; }

  friend constexpr bool operator==(Label a, Label b) { return a.m_ == b.m_; }
  friend constexpr bool operator<(Label a, Label b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return a.m_ < b.m_;
  }
  friend constexpr bool operator!=(Label a, Label b) { return !(a == b); }

  friend bool operator==(Label a, int b) { return a.is_finite() && a.m_ == b; }
  friend bool operator==(int a, Label b) { return b == a; }

  std::string to_string() const;           // "2", "3", ..., "inf"
  static Label from_string(const std::string& tok);  // inverse of to_string

 private:
  explicit constexpr Label(int m) : m_(m) {}
  int m_;  // 0 encodes infinity (private representation detail)
};

// An undirected labeled edge as supplied by a parser or a generator.
struct EdgeSpec {
  VertexId a, b;
  Label m;
};

// Immutable finite-rank Coxeter graph.  Vertices are kept sorted by name;
// only labels >= 3 or infinity are stored, everything else is synthesized.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;

  // Normalizing constructor; `extra_vertices` admits isolated vertices.
  // Throws Error on self-loops, labels < 2, or contradictory duplicates.
  static CoxeterGraph build(const std::vector<EdgeSpec>& edges,
                            const std::vector<VertexId>& extra_vertices = {});

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  bool has_vertex(const VertexId& v) const { return index_.count(v) > 0; }
  // Index of a vertex in vertices(); throws Error on unknown names.
  int index_of(const VertexId& v) const;

  // Label of an (unordered) vertex pair; label(v,v) = 1.
  Label label(const VertexId& a, const VertexId& b) const;

  // Edges with label >= 3 or infinity, sorted, each once (a < b).
  std::vector<EdgeSpec> edges() const;

  // Neighbors in the drawn graph (label >= 3 or infinity), sorted.
  const std::vector<VertexId>& neighbors(const VertexId& v) const;
  // Neighbors joined by an odd finite label >= 3, sorted.
  const std::vector<VertexId>& odd_neighbors(const VertexId& v) const;

  // Connected components of the drawn graph, each sorted, ordered by least
  // vertex.  A vertex with no drawn edge forms its own component.
  std::vector<std::vector<VertexId>> components() const;

  // Induced subgraph on a vertex subset (labels restricted).
  CoxeterGraph induced(const std::vector<VertexId>& subset) const;

  // Image of this graph under a vertex renaming (must be a bijection on the
  // vertex set); used by relabeling-invariance tests.
  CoxeterGraph relabeled(const std::map<VertexId, VertexId>& renaming) const;

  // Serialization: the line-oriented text format and the JSON object format.
  std::string to_text() const;
  std::string to_json_string() const;

 private:
  std::vector<VertexId> vertices_;              // sorted
  std::map<VertexId, int> index_;
  std::map<std::pair<int, int>, Label> labels_; // i < j, label >= 3 or inf
  std::vector<std::vector<VertexId>> adj_;      // drawn edges, sorted
  std::vector<std::vector<VertexId>> odd_adj_;  // odd finite edges, sorted
};

// Parsers.  parse_graph sniffs the format (leading '{' selects JSON).
CoxeterGraph parse_graph_text(const std::string& text);
CoxeterGraph parse_graph_json(const std::string& text);
CoxeterGraph parse_graph(const std::string& text);

// View of the subgraph formed by odd finite labels >= 3.  Its connected
// components are exactly the conjugacy classes of generators.
class OddGraph {
 public:
  explicit OddGraph(const CoxeterGraph& g);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<VertexId>& neighbors(const VertexId& v) const;
  bool has_edge(const VertexId& a, const VertexId& b) const;

  // Component of one vertex / all components (sorted as in CoxeterGraph).
  std::vector<VertexId> component_of(const VertexId& x) const;
  std::vector<std::vector<VertexId>> components() const;

  // Number of edges inside a vertex subset.
  int edge_count(const std::vector<VertexId>& subset) const;

 private:
  std::vector<VertexId> vertices_;
  std::map<VertexId, std::vector<VertexId>> adj_;
};

// Convenience: odd component of x in g, sorted.
std::vector<VertexId> odd_component(const CoxeterGraph& g, const VertexId& x);

// Cycle structure of one connected odd component.
struct CycleAnalysis {
  bool acyclic = true;
  std::vector<VertexId> cycle_vertices;  // union over all simple closed paths
  int cycle_rank = 0;                    // edges - vertices + 1
};

// `component` must be one connected component of `odd`.  The vertex union of
// all simple closed paths equals the union of 2-edge-connected blocks with at
// least three vertices, which is what is computed (bridges removed first).
CycleAnalysis cycle_analysis(const OddGraph& odd,
                             const std::vector<VertexId>& component);

// Rooted tree with its induced partial order: x <= y iff x lies on the unique
// root-to-y path.
class TreeOrder {
 public:
  TreeOrder() = default;
  // BFS tree over `edges` restricted to the tree's vertex set, rooted at
  // `root`, children visited in lexicographic order.
  static TreeOrder build(const VertexId& root,
                         const std::map<VertexId, std::vector<VertexId>>& adj,
                         const std::set<VertexId>& allowed);

  const VertexId& root() const { return root_; }
  bool contains(const VertexId& v) const { return depth_.count(v) > 0; }
  std::vector<VertexId> vertices() const;  // sorted
  int size() const { return static_cast<int>(depth_.size()); }

  // Parent of v (v != root), depth (root = 0).
  const VertexId& parent(const VertexId& v) const;
  int depth(const VertexId& v) const;

  // Order queries.  All throw Error when a vertex is outside the tree.
  bool leq(const VertexId& x, const VertexId& y) const;
  VertexId meet(const VertexId& x, const VertexId& y) const;
  // Elements covering v, i.e. its children (sorted).
  std::vector<VertexId> covers(const VertexId& v) const;
  // Minimal nonroot elements = children of the root.
  std::vector<VertexId> atoms() const;
  bool is_order_ideal(const std::set<VertexId>& q) const;
  // The saturated chain from x up to y; requires leq(x,y).
  std::vector<VertexId> saturated_chain(const VertexId& x,
                                        const VertexId& y) const;

 private:
  VertexId root_;
  std::map<VertexId, VertexId> parent_;
  std::map<VertexId, int> depth_;
  std::map<VertexId, std::vector<VertexId>> children_;
};

// Decomposition of a connected odd component around a core K: the component
// is the union of the full subgraph on K and pairwise-disjoint trees T_k, one
// per k in K, with T_k meeting K exactly in k.  Valid whenever K is connected
// (in the odd graph) and contains every cycle vertex of the component.
struct TreeDecomposition {
  std::vector<VertexId> core;          // sorted copy of K
  std::map<VertexId, TreeOrder> trees; // T_k rooted at k (singletons included)
};

TreeDecomposition tree_decomposition(const OddGraph& odd,
                                     const std::vector<VertexId>& component,
                                     const std::vector<VertexId>& core);

// Deterministic BFS spanning tree of one odd component, rooted at x; the
// canonical choice of paths p(x,y) used by root-word construction.
TreeOrder odd_spanning_tree(const CoxeterGraph& g, const VertexId& x);

}  // namespace wperp

#endif  // WPERP_GRAPH_HPP
