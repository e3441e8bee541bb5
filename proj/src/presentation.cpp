#include "wperp/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace wperp {

std::string to_string(PatternKind k) {
  switch (k) {
    case PatternKind::kAnchorBothTwo: return "anchor-both-2";
    case PatternKind::kAnchorEvenCommute: return "anchor-even-commute";
    case PatternKind::kAnchorFourChord: return "anchor-4-chord-3";
    case PatternKind::kOddStep: return "odd-step";
    case PatternKind::kSwapThreeThree: return "swap-3-3";
    case PatternKind::kSwapThreeFive: return "swap-3-5";
    case PatternKind::kFourStep: return "4-step";
  }
  return "?";
}

std::vector<EdgePair> edge_pairs(const CoxeterGraph& g, const VertexId& x) {
  std::vector<EdgePair> out;
  for (const auto& y : odd_component(g, x))
    for (const auto& s : g.vertices()) {
      if (s == y) continue;
      Label m = g.label(y, s);
      if (m.is_even()) out.push_back({y, s});  // even implies finite
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RelationInstance> relation_instances(const CoxeterGraph& g,
                                                 const VertexId& x) {
  std::vector<RelationInstance> out;
  auto O = odd_component(g, x);
  std::set<VertexId> in_o(O.begin(), O.end());

  auto emit = [&](EdgePair l, EdgePair r, int k, PatternKind pat,
                  std::vector<VertexId> q) {
    out.push_back({std::move(l), std::move(r), Label::finite(k), pat,
                   std::move(q)});
  };

  // Common anchor y, second coordinates s < t (both labels even finite).
  for (const auto& y : O) {
    std::vector<VertexId> evens;
    for (const auto& v : g.vertices())
      if (v != y && g.label(y, v).is_even()) evens.push_back(v);
    for (size_t i = 0; i < evens.size(); ++i)
      for (size_t j = i + 1; j < evens.size(); ++j) {
        const VertexId &s = evens[i], &t = evens[j];
        Label ms = g.label(y, s), mt = g.label(y, t), chord = g.label(s, t);
        if (ms == 2 && mt == 2) {
          if (chord.is_finite())
            emit({y, s}, {y, t}, chord.finite_value(),
                 PatternKind::kAnchorBothTwo, {y});
        } else if (chord == 2 && (ms == 2) != (mt == 2)) {
          emit({y, s}, {y, t}, 2, PatternKind::kAnchorEvenCommute, {y});
        } else if (chord == 3 && ((ms == 2 && mt == 4) ||
                                  (ms == 4 && mt == 2))) {
          emit({y, s}, {y, t}, 4, PatternKind::kAnchorFourChord, {y});
        }
      }
  }

  // Common second coordinate s, anchors y < z joined by an odd label.
  for (const auto& s : g.vertices()) {
    std::vector<VertexId> anchors;
    for (const auto& y : O)
      if (y != s && g.label(y, s).is_even()) anchors.push_back(y);
    for (size_t i = 0; i < anchors.size(); ++i)
      for (size_t j = i + 1; j < anchors.size(); ++j) {
        const VertexId &y = anchors[i], &z = anchors[j];
        Label step = g.label(y, z);
        if (!step.is_odd()) continue;
        Label mys = g.label(y, s), mzs = g.label(z, s);
        if (mys == 2 && mzs == 2)
          emit({y, s}, {z, s}, 1, PatternKind::kOddStep, {y, z});
        else if (step == 3 &&
                 ((mys == 2 && mzs == 4) || (mys == 4 && mzs == 2)))
          emit({y, s}, {z, s}, 2, PatternKind::kFourStep, {y, z});
      }
  }

  // Swapped pairs (y, s) / (s, y): both in O with m(y, s) = 2, related
  // through a middle vertex y'.  Each qualifying y' is its own instance.
  for (size_t i = 0; i < O.size(); ++i)
    for (size_t j = i + 1; j < O.size(); ++j) {
      const VertexId &y = O[i], &s = O[j];
      if (g.label(y, s) != 2) continue;
      for (const auto& mid : g.vertices()) {
        if (mid == y || mid == s) continue;
        Label a = g.label(y, mid), b = g.label(s, mid);
        if (a == 3 && b == 3)
          emit({y, s}, {s, y}, 1, PatternKind::kSwapThreeThree, {y, mid, s});
        else if ((a == 3 && b == 5) || (a == 5 && b == 3))
          emit({y, s}, {s, y}, 2, PatternKind::kSwapThreeFive, {y, mid, s});
      }
    }

  std::sort(out.begin(), out.end(),
            [](const RelationInstance& u, const RelationInstance& v) {
              return std::tie(u.left, u.right, u.pattern, u.q) <
                     std::tie(v.left, v.right, v.pattern, v.q);
            });
  return out;
}

bool certify_uniform_root(const CoxeterGraph& g, const VertexId& x,
                          const std::vector<EdgePair>& members) {
  OddGraph odd(g);
  auto O = odd.component_of(x);
  auto cy = cycle_analysis(odd, O);
  if (cy.acyclic) return true;

  std::set<VertexId> in_o(O.begin(), O.end());
  for (const auto& p : members) {
    if (g.label(p.y, p.s) != 2) continue;
    // restrict to the vertices of O commuting with p.s, flood from p.y
    std::set<VertexId> allowed;
    for (const auto& z : O)
      if (g.label(z, p.s) == 2) allowed.insert(z);
    std::set<VertexId> seen{p.y};
    std::vector<VertexId> queue{p.y};
    while (!queue.empty()) {
      VertexId v = queue.back();
      queue.pop_back();
      for (const auto& w : odd.neighbors(v))
        if (allowed.count(w) && seen.insert(w).second) queue.push_back(w);
    }
    bool covers = true;
    for (const auto& c : cy.cycle_vertices)
      if (!seen.count(c)) {
        covers = false;
        break;
      }
    if (covers) return true;
  }
  return false;
}

PerpPresentation perp_presentation(const CoxeterGraph& g, const VertexId& x) {
  if (!g.has_vertex(x)) throw Error("unknown generator: " + x);
  PerpPresentation p;
  p.x = x;
  p.odd_component = odd_component(g, x);
  p.pairs = edge_pairs(g, x);
  p.instances = relation_instances(g, x);

  OddGraph odd(g);
  p.y_rank = cycle_analysis(odd, p.odd_component).cycle_rank;

  std::map<EdgePair, int> pos;
  for (size_t i = 0; i < p.pairs.size(); ++i) pos[p.pairs[i]] = (int)i;

  // union-find over the equality instances
  std::vector<int> up(p.pairs.size());
  std::iota(up.begin(), up.end(), 0);
  auto find = [&](int v) {
    while (up[v] != v) v = up[v] = up[up[v]];
    return v;
  };
  for (const auto& inst : p.instances)
    if (inst.k == 1) up[find(pos.at(inst.left))] = find(pos.at(inst.right));

  std::map<int, std::vector<EdgePair>> groups;
  for (size_t i = 0; i < p.pairs.size(); ++i)
    groups[find((int)i)].push_back(p.pairs[i]);
  for (auto& [root, members] : groups) {
    PairClass c;
    c.members = members;  // already sorted: pairs were inserted in order
    c.uniform_root_certified = certify_uniform_root(g, x, c.members);
    p.classes.push_back(std::move(c));
  }
  std::sort(p.classes.begin(), p.classes.end(),
            [](const PairClass& a, const PairClass& b) {
              return a.members.front() < b.members.front();
            });

  std::map<EdgePair, int> cls;
  for (size_t c = 0; c < p.classes.size(); ++c)
    for (const auto& m : p.classes[c].members) cls[m] = (int)c;

  const size_t n = p.classes.size();
  p.orders.assign(n, std::vector<Label>(n, Label::infinity()));
  for (size_t i = 0; i < n; ++i) p.orders[i][i] = Label::finite(1);
  for (const auto& inst : p.instances) {
    if (inst.k == 1) continue;
    int a = cls.at(inst.left), b = cls.at(inst.right);
    if (a == b)
      throw InconsistentOrders(
          "finite product order claimed inside one generator class");
    if (p.orders[a][b].is_finite() && p.orders[a][b] != inst.k)
      throw InconsistentOrders(
          "conflicting product orders between one pair of classes");
    p.orders[a][b] = p.orders[b][a] = inst.k;
  }

  p.supported = std::all_of(p.classes.begin(), p.classes.end(),
                            [](const PairClass& c) {
                              return c.uniform_root_certified;
                            });
  return p;
}

int class_index_of(const PerpPresentation& p, const EdgePair& pair) {
  for (size_t c = 0; c < p.classes.size(); ++c)
    if (std::binary_search(p.classes[c].members.begin(),
                           p.classes[c].members.end(), pair))
      return (int)c;
  return -1;
}

RootExpression dihedral_perp_root(const CoxeterGraph& g, const EdgePair& p) {
  Label m = g.label(p.y, p.s);
  if (!m.is_even())
    throw Error("pair (" + p.y + ", " + p.s + ") has odd or infinite label");
  RootExpression e;
  const int half = (m.finite_value() - 2) / 2;
  for (int i = 0; i < half; ++i) e.word.push_back(i % 2 == 0 ? p.s : p.y);
  e.base = half % 2 == 0 ? p.s : p.y;
  return e;
}

std::vector<VertexId> transport_word(const CoxeterGraph& g,
                                     const TreeOrder& tree,
                                     const VertexId& y) {
  std::vector<VertexId> word;
  auto path = tree.saturated_chain(tree.root(), y);
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    const VertexId &a = path[i], &b = path[i + 1];
    const int len = g.label(a, b).finite_value() - 1;
    for (int t = 0; t < len; ++t) word.push_back(t % 2 == 0 ? b : a);
  }
  return word;
}

RootExpression root_expression(const CoxeterGraph& g, const VertexId& x,
                               const EdgePair& p) {
  TreeOrder tree = odd_spanning_tree(g, x);
  RootExpression e = dihedral_perp_root(g, p);
  std::vector<VertexId> word = transport_word(g, tree, p.y);
  word.insert(word.end(), e.word.begin(), e.word.end());
  e.word = std::move(word);
  return e;
}

RootVector evaluate(const CoxeterGraph& g, const FormMatrix& B,
                    const RootExpression& e) {
  std::vector<int> idx;
  idx.reserve(e.word.size());
  for (const auto& v : e.word) idx.push_back(g.index_of(v));
  return apply_word(B, idx, simple_root(g.size(), g.index_of(e.base)));
}

RootVector gamma_root(const CoxeterGraph& g, const FormMatrix& B,
                      const VertexId& x, const EdgePair& p) {
  return evaluate(g, B, root_expression(g, x, p));
}

}  // namespace wperp
