#include "wperp/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace wperp {

/*--------------------------------------------------------------------------
  Label
 --------------------------------------------------------------------------*/

int Label::finite_value() const {
  if (is_infinite()) throw Error("finite_value() called on an infinite label");
  return m_;
}

std::string Label::to_string() const {
  return is_infinite() ? "inf" : std::to_string(m_);
}

Label Label::from_string(const std::string& tok) {
  if (tok == "inf") return infinity();
  if (tok.empty() ||
      !std::all_of(tok.begin(), tok.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw Error("bad label token '" + tok + "' (expected integer or 'inf')");
  long v = std::stol(tok);
  if (v < 2) throw Error("label " + tok + " is below 2");
  if (v > 1000000) throw Error("label " + tok + " is unreasonably large");
  return finite(static_cast<int>(v));
}

/*--------------------------------------------------------------------------
  CoxeterGraph
 --------------------------------------------------------------------------*/

CoxeterGraph CoxeterGraph::build(const std::vector<EdgeSpec>& edges,
                                 const std::vector<VertexId>& extra_vertices) {
  CoxeterGraph g;
  std::set<VertexId> names(extra_vertices.begin(), extra_vertices.end());
  for (const auto& e : edges) {
    if (e.a == e.b) throw Error("self-loop on vertex '" + e.a + "'");
    if (e.m.is_finite() && e.m.finite_value() < 2)
      throw Error("label below 2 on edge " + e.a + "-" + e.b);
    names.insert(e.a);
    names.insert(e.b);
  }
  for (const auto& n : names) {
    if (n.empty() || std::any_of(n.begin(), n.end(), [](unsigned char c) {
          return std::isspace(c);
        }))
      throw Error("bad vertex name '" + n + "'");
  }
  if (names.empty()) throw Error("graph has no vertices");

  g.vertices_.assign(names.begin(), names.end());
  for (int i = 0; i < g.size(); ++i) g.index_[g.vertices_[i]] = i;

  std::map<std::pair<int, int>, Label> seen;
  for (const auto& e : edges) {
    int i = g.index_[e.a], j = g.index_[e.b];
    if (i > j) std::swap(i, j);
    auto key = std::make_pair(i, j);
    auto it = seen.find(key);
    if (it != seen.end()) {
      if (it->second != e.m)
        throw Error("contradictory labels for edge " + e.a + "-" + e.b + ": " +
                    it->second.to_string() + " vs " + e.m.to_string());
      continue;
    }
    seen.emplace(key, e.m);
  }
  for (const auto& [key, m] : seen)
    if (m.is_infinite() || m.finite_value() >= 3) g.labels_.emplace(key, m);

  g.adj_.assign(g.size(), {});
  g.odd_adj_.assign(g.size(), {});
  for (const auto& [key, m] : g.labels_) {
    const auto& [i, j] = key;
    g.adj_[i].push_back(g.vertices_[j]);
    g.adj_[j].push_back(g.vertices_[i]);
    if (m.is_odd()) {
      g.odd_adj_[i].push_back(g.vertices_[j]);
      g.odd_adj_[j].push_back(g.vertices_[i]);
    }
  }
  for (auto& v : g.adj_) std::sort(v.begin(), v.end());
  for (auto& v : g.odd_adj_) std::sort(v.begin(), v.end());
  return g;
}

int CoxeterGraph::index_of(const VertexId& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw Error("unknown vertex '" + v + "'");
  return it->second;
}

Label CoxeterGraph::label(const VertexId& a, const VertexId& b) const {
  int i = index_of(a), j = index_of(b);
  if (i == j) return Label::finite(1);
  if (i > j) std::swap(i, j);
  auto it = labels_.find({i, j});
  return it == labels_.end() ? Label::finite(2) : it->second;
}

std::vector<EdgeSpec> CoxeterGraph::edges() const {
  std::vector<EdgeSpec> out;
  out.reserve(labels_.size());
  for (const auto& [key, m] : labels_)
    out.push_back({vertices_[key.first], vertices_[key.second], m});
  return out;
}

const std::vector<VertexId>& CoxeterGraph::neighbors(const VertexId& v) const {
  return adj_[index_of(v)];
}

const std::vector<VertexId>& CoxeterGraph::odd_neighbors(
    const VertexId& v) const {
  return odd_adj_[index_of(v)];
}

namespace {

// Generic BFS component extraction over sorted adjacency, deterministic.
std::vector<std::vector<VertexId>> bfs_components(
    const std::vector<VertexId>& verts,
    const std::function<const std::vector<VertexId>&(const VertexId&)>& adj) {
  std::set<VertexId> unseen(verts.begin(), verts.end());
  std::vector<std::vector<VertexId>> out;
  for (const auto& start : verts) {
    if (!unseen.count(start)) continue;
    std::vector<VertexId> comp;
    std::deque<VertexId> queue{start};
    unseen.erase(start);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (const auto& w : adj(v)) {
        if (unseen.erase(w)) queue.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::vector<std::vector<VertexId>> CoxeterGraph::components() const {
  return bfs_components(vertices_,
                        [this](const VertexId& v) -> const std::vector<VertexId>& {
                          return neighbors(v);
                        });
}

CoxeterGraph CoxeterGraph::induced(const std::vector<VertexId>& subset) const {
  std::set<VertexId> keep;
  for (const auto& v : subset) {
    index_of(v);  // validates
    keep.insert(v);
  }
  std::vector<EdgeSpec> es;
  for (const auto& e : edges())
    if (keep.count(e.a) && keep.count(e.b)) es.push_back(e);
  return build(es, std::vector<VertexId>(keep.begin(), keep.end()));
}

CoxeterGraph CoxeterGraph::relabeled(
    const std::map<VertexId, VertexId>& renaming) const {
  std::set<VertexId> images;
  for (const auto& v : vertices_) {
    auto it = renaming.find(v);
    if (it == renaming.end()) throw Error("renaming misses vertex '" + v + "'");
    if (!images.insert(it->second).second)
      throw Error("renaming is not injective at '" + it->second + "'");
  }
  std::vector<EdgeSpec> es;
  for (const auto& e : edges())
    es.push_back({renaming.at(e.a), renaming.at(e.b), e.m});
  std::vector<VertexId> vs;
  for (const auto& v : vertices_) vs.push_back(renaming.at(v));
  return build(es, vs);
}

std::string CoxeterGraph::to_text() const {
  std::ostringstream os;
  for (const auto& v : vertices_) os << "vertex " << v << "\n";
  for (const auto& e : edges())
    os << "edge " << e.a << " " << e.b << " " << e.m.to_string() << "\n";
  return os.str();
}

std::string CoxeterGraph::to_json_string() const {
  nlohmann::json j;
  j["vertices"] = vertices_;
  auto& arr = j["edges"] = nlohmann::json::array();
  for (const auto& e : edges()) {
    nlohmann::json entry = {e.a, e.b};
    if (e.m.is_infinite())
      entry.push_back("inf");
    else
      entry.push_back(e.m.finite_value());
    arr.push_back(entry);
  }
  return j.dump();
}

/*--------------------------------------------------------------------------
  Parsing
 --------------------------------------------------------------------------*/

CoxeterGraph parse_graph_text(const std::string& text) {
  std::vector<EdgeSpec> edges;
  std::vector<VertexId> extra;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;  // blank
    try {
      if (word == "vertex") {
        std::string name, rest;
        if (!(ls >> name) || (ls >> rest))
          throw Error("expected 'vertex NAME'");
        extra.push_back(name);
      } else if (word == "edge") {
        std::string a, b, m, rest;
        if (!(ls >> a >> b >> m) || (ls >> rest))
          throw Error("expected 'edge A B M'");
        edges.push_back({a, b, Label::from_string(m)});
      } else {
        throw Error("unknown directive '" + word + "'");
      }
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  try {
    return CoxeterGraph::build(edges, extra);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

CoxeterGraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top-level JSON value must be an object");
  std::vector<VertexId> extra;
  std::vector<EdgeSpec> edges;
  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) throw ParseError("'vertices' must be an array");
    for (const auto& v : j["vertices"]) {
      if (!v.is_string()) throw ParseError("vertex names must be strings");
      extra.push_back(v.get<std::string>());
    }
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError("'edges' must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_string() ||
          !e[1].is_string())
        throw ParseError("each edge must be [\"a\",\"b\",M]");
      Label m;
      if (e[2].is_string())
        m = Label::from_string(e[2].get<std::string>());
      else if (e[2].is_number_integer())
        m = Label::from_string(std::to_string(e[2].get<long>()));
      else
        throw ParseError("edge label must be an integer or \"inf\"");
      edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(), m});
    }
  }
  try {
    return CoxeterGraph::build(edges, extra);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

CoxeterGraph parse_graph(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_graph_json(text) : parse_graph_text(text);
  }
  throw ParseError("empty input");
}

/*--------------------------------------------------------------------------
  OddGraph and cycle structure
 --------------------------------------------------------------------------*/

OddGraph::OddGraph(const CoxeterGraph& g) : vertices_(g.vertices()) {
  for (const auto& v : vertices_) adj_[v] = g.odd_neighbors(v);
}

const std::vector<VertexId>& OddGraph::neighbors(const VertexId& v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw Error("unknown vertex '" + v + "'");
  return it->second;
}

bool OddGraph::has_edge(const VertexId& a, const VertexId& b) const {
  const auto& ns = neighbors(a);
  return std::binary_search(ns.begin(), ns.end(), b);
}

std::vector<VertexId> OddGraph::component_of(const VertexId& x) const {
  neighbors(x);  // validates
  for (auto& comp : components())
    if (std::binary_search(comp.begin(), comp.end(), x)) return comp;
  return {x};  // unreachable: every vertex is in some component
}

std::vector<std::vector<VertexId>> OddGraph::components() const {
  return bfs_components(vertices_,
                        [this](const VertexId& v) -> const std::vector<VertexId>& {
                          return neighbors(v);
                        });
}

int OddGraph::edge_count(const std::vector<VertexId>& subset) const {
  std::set<VertexId> keep(subset.begin(), subset.end());
  int count = 0;
  for (const auto& v : subset)
    for (const auto& w : neighbors(v))
      if (v < w && keep.count(w)) ++count;
  return count;
}

std::vector<VertexId> odd_component(const CoxeterGraph& g, const VertexId& x) {
  g.index_of(x);
  return OddGraph(g).component_of(x);
}

CycleAnalysis cycle_analysis(const OddGraph& odd,
                             const std::vector<VertexId>& component) {
  CycleAnalysis out;
  int edges = odd.edge_count(component);
  out.cycle_rank = edges - static_cast<int>(component.size()) + 1;
  out.acyclic = out.cycle_rank == 0;
  if (out.acyclic) return out;

  // Bridges via iterative DFS (disc/low), then the components of the
  // bridge-free subgraph; blocks with >= 3 vertices carry all simple cycles.
  std::set<VertexId> inside(component.begin(), component.end());
  std::map<VertexId, int> disc, low;
  std::set<std::pair<VertexId, VertexId>> bridges;  // both orientations
  int time = 0;
  for (const auto& start : component) {
    if (disc.count(start)) continue;
    // Stack entries: (vertex, parent, next-neighbor-index).
    std::vector<std::tuple<VertexId, VertexId, size_t>> stack;
    stack.emplace_back(start, VertexId{}, 0);
    disc[start] = low[start] = time++;
    while (!stack.empty()) {
      auto& [v, parent, idx] = stack.back();
      const auto& ns = odd.neighbors(v);
      bool descended = false;
      while (idx < ns.size()) {
        const VertexId& w = ns[idx++];
        if (!inside.count(w)) continue;
        if (!disc.count(w)) {
          disc[w] = low[w] = time++;
          const VertexId child = w, par = v;  // copies: emplace may reallocate
          stack.emplace_back(child, par, 0);
          descended = true;
          break;
        }
        if (w != parent) low[v] = std::min(low[v], disc[w]);
      }
      if (descended) continue;
      // v is finished; propagate low to its parent and test the tree edge.
      auto [vv, pp, ii] = stack.back();
      stack.pop_back();
      if (!stack.empty()) {
        auto& [pv, pparent, pidx] = stack.back();
        low[pv] = std::min(low[pv], low[vv]);
        if (low[vv] > disc[pv]) {
          bridges.insert({pv, vv});
          bridges.insert({vv, pv});
        }
      }
    }
  }

  // Components after removing bridges.
  std::set<VertexId> unseen(inside);
  std::set<VertexId> cyc;
  for (const auto& start : component) {
    if (!unseen.count(start)) continue;
    std::vector<VertexId> block;
    std::deque<VertexId> queue{start};
    unseen.erase(start);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      block.push_back(v);
      for (const auto& w : odd.neighbors(v)) {
        if (!inside.count(w) || bridges.count({v, w})) continue;
        if (unseen.erase(w)) queue.push_back(w);
      }
    }
    if (block.size() >= 3) cyc.insert(block.begin(), block.end());
  }
  out.cycle_vertices.assign(cyc.begin(), cyc.end());
  return out;
}

/*--------------------------------------------------------------------------
  TreeOrder
 --------------------------------------------------------------------------*/

TreeOrder TreeOrder::build(const VertexId& root,
                           const std::map<VertexId, std::vector<VertexId>>& adj,
                           const std::set<VertexId>& allowed) {
  if (!allowed.count(root)) throw Error("tree root outside its vertex set");
  TreeOrder t;
  t.root_ = root;
  t.depth_[root] = 0;
  std::deque<VertexId> queue{root};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    auto it = adj.find(v);
    if (it == adj.end()) continue;
    for (const auto& w : it->second) {
      if (!allowed.count(w) || t.depth_.count(w)) continue;
      t.depth_[w] = t.depth_[v] + 1;
      t.parent_[w] = v;
      t.children_[v].push_back(w);
      queue.push_back(w);
    }
  }
  return t;
}

std::vector<VertexId> TreeOrder::vertices() const {
  std::vector<VertexId> out;
  for (const auto& [v, d] : depth_) out.push_back(v);
  return out;
}

const VertexId& TreeOrder::parent(const VertexId& v) const {
  auto it = parent_.find(v);
  if (it == parent_.end()) throw Error("vertex '" + v + "' has no parent");
  return it->second;
}

int TreeOrder::depth(const VertexId& v) const {
  auto it = depth_.find(v);
  if (it == depth_.end()) throw Error("vertex '" + v + "' outside the tree");
  return it->second;
}

bool TreeOrder::leq(const VertexId& x, const VertexId& y) const {
  int dx = depth(x);
  VertexId v = y;
  int dv = depth(v);
  while (dv > dx) {
    v = parent_.at(v);
    --dv;
  }
  return v == x;
}

VertexId TreeOrder::meet(const VertexId& x, const VertexId& y) const {
  VertexId a = x, b = y;
  int da = depth(a), db = depth(b);
  while (da > db) { a = parent_.at(a); --da; }
  while (db > da) { b = parent_.at(b); --db; }
  while (a != b) {
    a = parent_.at(a);
    b = parent_.at(b);
  }
  return a;
}

std::vector<VertexId> TreeOrder::covers(const VertexId& v) const {
  depth(v);  // validates
  auto it = children_.find(v);
  return it == children_.end() ? std::vector<VertexId>{} : it->second;
}

std::vector<VertexId> TreeOrder::atoms() const { return covers(root_); }

bool TreeOrder::is_order_ideal(const std::set<VertexId>& q) const {
  for (const auto& v : q) {
    depth(v);  // validates
    if (v != root_ && !q.count(parent_.at(v))) return false;
  }
  return true;
}

std::vector<VertexId> TreeOrder::saturated_chain(const VertexId& x,
                                                 const VertexId& y) const {
  if (!leq(x, y))
    throw Error("saturated_chain requires '" + x + "' below '" + y + "'");
  std::vector<VertexId> chain;
  VertexId v = y;
  while (v != x) {
    chain.push_back(v);
    v = parent_.at(v);
  }
  chain.push_back(x);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

/*--------------------------------------------------------------------------
  Tree decomposition around a core
 --------------------------------------------------------------------------*/

TreeDecomposition tree_decomposition(const OddGraph& odd,
                                     const std::vector<VertexId>& component,
                                     const std::vector<VertexId>& core) {
  if (core.empty()) throw Error("tree decomposition needs a nonempty core");
  std::set<VertexId> comp_set(component.begin(), component.end());
  std::set<VertexId> core_set(core.begin(), core.end());
  for (const auto& k : core)
    if (!comp_set.count(k))
      throw Error("core vertex '" + k + "' outside the component");

  // Core must be connected inside the odd graph.
  {
    std::set<VertexId> seen{*core_set.begin()};
    std::deque<VertexId> queue{*core_set.begin()};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (const auto& w : odd.neighbors(v))
        if (core_set.count(w) && seen.insert(w).second) queue.push_back(w);
    }
    if (seen.size() != core_set.size())
      throw Error("core is not connected in the odd graph");
  }

  // Core must contain every vertex lying on a simple cycle.
  for (const auto& v : cycle_analysis(odd, component).cycle_vertices)
    if (!core_set.count(v))
      throw Error("core misses cycle vertex '" + v + "'");

  // Each outside vertex hangs off exactly one core vertex; find the
  // attachment by multi-source BFS from the core.
  std::map<VertexId, VertexId> tree_of;
  std::deque<VertexId> queue;
  for (const auto& k : core_set) {
    tree_of[k] = k;
    queue.push_back(k);
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto& w : odd.neighbors(v)) {
      if (!comp_set.count(w) || tree_of.count(w)) continue;
      tree_of[w] = tree_of[v];
      queue.push_back(w);
    }
  }

  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& v : component) adj[v] = odd.neighbors(v);

  TreeDecomposition td;
  td.core.assign(core_set.begin(), core_set.end());
  for (const auto& k : td.core) {
    std::set<VertexId> allowed{k};
    for (const auto& [v, owner] : tree_of)
      if (owner == k) allowed.insert(v);
    td.trees.emplace(k, TreeOrder::build(k, adj, allowed));
  }
  return td;
}

TreeOrder odd_spanning_tree(const CoxeterGraph& g, const VertexId& x) {
  auto comp = odd_component(g, x);
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& v : comp) adj[v] = g.odd_neighbors(v);
  return TreeOrder::build(x, adj,
                          std::set<VertexId>(comp.begin(), comp.end()));
}

}  // namespace wperp
