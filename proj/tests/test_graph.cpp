// Graph model, parsers, odd subgraph, cycles, tree decomposition, tree order.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <deque>
#include <random>

#include "wperp/graph.hpp"

using namespace wperp;

namespace {

CoxeterGraph path_graph(const std::vector<VertexId>& names,
                        const std::vector<Label>& labels) {
  std::vector<EdgeSpec> es;
  for (size_t i = 0; i + 1 < names.size(); ++i)
    es.push_back({names[i], names[i + 1], labels[i]});
  return CoxeterGraph::build(es, names);
}

}  // namespace

TEST_CASE("labels") {
  CHECK(Label::finite(3).to_string() == "3");
  CHECK(Label::infinity().to_string() == "inf");
  CHECK(Label::from_string("inf").is_infinite());
  CHECK(Label::from_string("4") == 4);
  CHECK(Label::finite(3) < Label::infinity());
  CHECK(!(Label::infinity() < Label::infinity()));
  CHECK(Label::finite(4).is_even());
  CHECK(Label::finite(5).is_odd());
  CHECK(!Label::infinity().is_even());
  CHECK(!Label::infinity().is_odd());
  CHECK_THROWS_AS(Label::from_string("1"), Error);
  CHECK_THROWS_AS(Label::from_string("x"), Error);
  CHECK_THROWS_AS(Label::infinity().finite_value(), Error);
}

TEST_CASE("build: defaults, errors") {
  auto g = CoxeterGraph::build({{"a", "b", Label::finite(3)},
                                {"b", "c", Label::finite(3)}});
  CHECK(g.size() == 3);
  CHECK(g.label("a", "c") == 2);  // unspecified pair defaults to 2
  CHECK(g.label("a", "a") == 1);
  CHECK(g.label("b", "a") == 3);

  CHECK_THROWS_AS(CoxeterGraph::build({{"a", "a", Label::finite(3)}}), Error);
  CHECK_THROWS_AS(CoxeterGraph::build({{"a", "b", Label::finite(1)}}), Error);
  // contradictory duplicate
  CHECK_THROWS_AS(CoxeterGraph::build({{"a", "b", Label::finite(3)},
                                       {"b", "a", Label::finite(4)}}),
                  Error);
  // agreeing duplicate is fine
  CHECK_NOTHROW(CoxeterGraph::build({{"a", "b", Label::finite(3)},
                                     {"b", "a", Label::finite(3)}}));
  // infinity accepted
  auto h = CoxeterGraph::build({{"a", "b", Label::infinity()}});
  CHECK(h.label("a", "b").is_infinite());
}

TEST_CASE("text parser") {
  auto g = parse_graph_text(
      "# demo\n"
      "vertex d\n"
      "edge a b 3\n"
      "edge a c inf  # chord\n");
  CHECK(g.size() == 4);
  CHECK(g.label("a", "c").is_infinite());
  CHECK(g.label("a", "d") == 2);

  CHECK_THROWS_AS(parse_graph_text("edge a b\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_text("edgy a b 3\n"), ParseError);
  try {
    parse_graph_text("edge a b 3\nedge c d oops\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("json parser and round trips") {
  auto g = parse_graph_json(
      R"({"vertices":["a","b","c","d"],"edges":[["a","b",3],["a","c","inf"]]})");
  CHECK(g.size() == 4);
  CHECK(g.label("a", "c").is_infinite());

  // both serializations parse back to the same graph
  auto from_text = parse_graph(g.to_text());
  auto from_json = parse_graph(g.to_json_string());
  CHECK(from_text.to_text() == g.to_text());
  CHECK(from_json.to_json_string() == g.to_json_string());

  CHECK_THROWS_AS(parse_graph_json("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_graph_json(R"({"edges":[["a","b",1.5]]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("odd components") {
  // chain a-b(3)-c(4): odd component of a is {a,b}; 4 is even
  auto g = path_graph({"a", "b", "c"}, {Label::finite(3), Label::finite(4)});
  CHECK(odd_component(g, "a") == std::vector<VertexId>{"a", "b"});
  CHECK(odd_component(g, "c") == std::vector<VertexId>{"c"});

  // all labels 3: one odd component
  auto a4 = path_graph({"x1", "x2", "x3", "x4"},
                       {Label::finite(3), Label::finite(3), Label::finite(3)});
  CHECK(odd_component(a4, "x2").size() == 4);

  // infinite edge is not odd
  auto inf = CoxeterGraph::build({{"a", "b", Label::infinity()}});
  CHECK(odd_component(inf, "a") == std::vector<VertexId>{"a"});

  CHECK_THROWS_AS(odd_component(inf, "zz"), Error);
}

TEST_CASE("cycle analysis") {
  // triangle, all 3s: rank 1, all vertices on the cycle
  auto tri = CoxeterGraph::build({{"a", "b", Label::finite(3)},
                                  {"b", "c", Label::finite(3)},
                                  {"a", "c", Label::finite(3)}});
  OddGraph odd(tri);
  auto ca = cycle_analysis(odd, odd.component_of("a"));
  CHECK(!ca.acyclic);
  CHECK(ca.cycle_rank == 1);
  CHECK(ca.cycle_vertices == std::vector<VertexId>{"a", "b", "c"});

  // tree: rank 0
  auto a4 = path_graph({"x1", "x2", "x3", "x4"},
                       {Label::finite(3), Label::finite(3), Label::finite(3)});
  OddGraph odd2(a4);
  auto ca2 = cycle_analysis(odd2, odd2.component_of("x1"));
  CHECK(ca2.acyclic);
  CHECK(ca2.cycle_rank == 0);
  CHECK(ca2.cycle_vertices.empty());

  // 4-cycle (diamond): rank 1, 4 cycle vertices
  auto square = CoxeterGraph::build({{"x0", "x1", Label::finite(3)},
                                     {"x1", "x2", Label::finite(3)},
                                     {"x2", "x3", Label::finite(3)},
                                     {"x3", "x0", Label::finite(3)}});
  OddGraph odd3(square);
  auto ca3 = cycle_analysis(odd3, odd3.component_of("x0"));
  CHECK(ca3.cycle_rank == 1);
  CHECK(ca3.cycle_vertices.size() == 4);

  // cycle with a pendant: pendant is off-cycle
  auto pend = CoxeterGraph::build({{"a", "b", Label::finite(3)},
                                   {"b", "c", Label::finite(3)},
                                   {"a", "c", Label::finite(3)},
                                   {"c", "d", Label::finite(5)}});
  OddGraph odd4(pend);
  auto ca4 = cycle_analysis(odd4, odd4.component_of("a"));
  CHECK(ca4.cycle_rank == 1);
  CHECK(ca4.cycle_vertices == std::vector<VertexId>{"a", "b", "c"});

  // two triangles sharing one vertex: rank 2, all five on cycles
  auto bowtie = CoxeterGraph::build({{"a", "b", Label::finite(3)},
                                     {"b", "c", Label::finite(3)},
                                     {"a", "c", Label::finite(3)},
                                     {"c", "d", Label::finite(3)},
                                     {"d", "e", Label::finite(3)},
                                     {"c", "e", Label::finite(3)}});
  OddGraph odd5(bowtie);
  auto ca5 = cycle_analysis(odd5, odd5.component_of("a"));
  CHECK(ca5.cycle_rank == 2);
  CHECK(ca5.cycle_vertices.size() == 5);
}

TEST_CASE("tree order queries") {
  // path r-a-b plus child c of a
  std::map<VertexId, std::vector<VertexId>> adj{
      {"r", {"a"}}, {"a", {"b", "c", "r"}}, {"b", {"a"}}, {"c", {"a"}}};
  auto t = TreeOrder::build("r", adj, {"r", "a", "b", "c"});
  CHECK(t.root() == "r");
  CHECK(t.depth("b") == 2);
  CHECK(t.parent("a") == "r");
  CHECK(t.leq("r", "b"));
  CHECK(t.leq("a", "b"));
  CHECK(!t.leq("b", "a"));
  CHECK(!t.leq("b", "c"));
  CHECK(t.meet("b", "c") == "a");
  CHECK(t.meet("b", "r") == "r");
  CHECK(t.atoms() == std::vector<VertexId>{"a"});
  CHECK(t.covers("a") == std::vector<VertexId>{"b", "c"});
  CHECK(t.is_order_ideal({"r", "a"}));
  CHECK(t.is_order_ideal({}));
  CHECK(!t.is_order_ideal({"a", "b"}));  // misses the root below a
  CHECK(t.saturated_chain("r", "b") ==
        std::vector<VertexId>{"r", "a", "b"});
  CHECK_THROWS_AS(t.saturated_chain("b", "c"), Error);
  CHECK_THROWS_AS(t.depth("zz"), Error);
}

TEST_CASE("tree decomposition") {
  // path a-b-c with core {b}: T_b has atoms a and c
  auto p = path_graph({"a", "b", "c"}, {Label::finite(3), Label::finite(3)});
  OddGraph odd(p);
  auto td = tree_decomposition(odd, odd.component_of("b"), {"b"});
  CHECK(td.core == std::vector<VertexId>{"b"});
  CHECK(td.trees.at("b").atoms() == std::vector<VertexId>{"a", "c"});

  // triangle with pendant d at a; core = triangle
  auto tri = CoxeterGraph::build({{"a", "b", Label::finite(3)},
                                  {"b", "c", Label::finite(3)},
                                  {"a", "c", Label::finite(3)},
                                  {"a", "d", Label::finite(3)}});
  OddGraph odd2(tri);
  auto td2 = tree_decomposition(odd2, odd2.component_of("a"), {"a", "b", "c"});
  CHECK(td2.trees.at("a").vertices() == std::vector<VertexId>{"a", "d"});
  CHECK(td2.trees.at("b").size() == 1);
  CHECK(td2.trees.at("c").size() == 1);

  // identity case: core = whole component
  auto td3 = tree_decomposition(odd2, odd2.component_of("a"),
                                odd2.component_of("a"));
  for (const auto& [k, t] : td3.trees) CHECK(t.size() == 1);

  // errors: core missing a cycle vertex / disconnected core
  CHECK_THROWS_AS(tree_decomposition(odd2, odd2.component_of("a"), {"a", "b"}),
                  Error);
  auto p5 = path_graph({"a", "b", "c", "d", "e"},
                       {Label::finite(3), Label::finite(3), Label::finite(3),
                        Label::finite(3)});
  OddGraph odd3(p5);
  CHECK_THROWS_AS(tree_decomposition(odd3, odd3.component_of("a"), {"a", "c"}),
                  Error);
  CHECK_NOTHROW(tree_decomposition(odd3, odd3.component_of("a"), {"b", "c"}));
}

TEST_CASE("relabeling equivariance") {
  auto g = CoxeterGraph::build({{"a", "b", Label::finite(3)},
                                {"b", "c", Label::finite(4)},
                                {"c", "d", Label::infinity()},
                                {"b", "d", Label::finite(5)}});
  std::map<VertexId, VertexId> ren{
      {"a", "q3"}, {"b", "q1"}, {"c", "q4"}, {"d", "q2"}};
  auto h = g.relabeled(ren);
  CHECK(h.label("q3", "q1") == 3);
  CHECK(h.label("q4", "q2").is_infinite());

  // odd components commute with relabeling
  auto oc = odd_component(g, "b");
  std::vector<VertexId> mapped;
  for (const auto& v : oc) mapped.push_back(ren.at(v));
  std::sort(mapped.begin(), mapped.end());
  CHECK(mapped == odd_component(h, "q1"));

  CHECK_THROWS_AS(g.relabeled({{"a", "x"}}), Error);
}

TEST_CASE("cycle rank formula and decomposition partition (randomized)") {
  std::mt19937_64 rng(20250819);
  for (int iter = 0; iter < 50; ++iter) {
    // random connected odd graph on n <= 9 vertices
    int n = 2 + static_cast<int>(rng() % 8);
    std::vector<VertexId> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<EdgeSpec> es;
    for (int i = 1; i < n; ++i)
      es.push_back({names[i], names[rng() % i], Label::finite(3)});
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 5 == 0) es.push_back({names[i], names[j], Label::finite(3)});
    CoxeterGraph g;
    try {
      g = CoxeterGraph::build(es);
    } catch (const Error&) {
      continue;  // duplicate edge with same label never throws; safeguard only
    }
    OddGraph odd(g);
    auto comp = odd.component_of(names[0]);
    REQUIRE(comp.size() == static_cast<size_t>(n));
    auto ca = cycle_analysis(odd, comp);
    CHECK(ca.cycle_rank == odd.edge_count(comp) - n + 1);

    // decomposition around the cycle core (padded to connected) partitions
    std::vector<VertexId> core = ca.cycle_vertices;
    if (core.empty()) core.push_back(comp[0]);
    // grow the core until connected (cycle vertices may span tree paths)
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const auto& v : comp) adj[v] = odd.neighbors(v);
    auto connected = [&](const std::vector<VertexId>& k) {
      std::set<VertexId> ks(k.begin(), k.end()), seen{k[0]};
      std::deque<VertexId> q{k[0]};
      while (!q.empty()) {
        auto v = q.front();
        q.pop_front();
        for (const auto& w : adj[v])
          if (ks.count(w) && seen.insert(w).second) q.push_back(w);
      }
      return seen.size() == ks.size();
    };
    while (!connected(core)) {
      // join via the spanning tree: add BFS parents of core vertices
      auto t = TreeOrder::build(comp[0], adj,
                                std::set<VertexId>(comp.begin(), comp.end()));
      std::set<VertexId> grown(core.begin(), core.end());
      for (const auto& v : core)
        if (v != t.root()) grown.insert(t.parent(v));
      core.assign(grown.begin(), grown.end());
    }
    auto td = tree_decomposition(odd, comp, core);
    // vertices outside the core are covered exactly once
    std::map<VertexId, int> cover;
    for (const auto& [k, t] : td.trees)
      for (const auto& v : t.vertices())
        if (v != k) cover[v]++;
    std::set<VertexId> core_set(core.begin(), core.end());
    for (const auto& v : comp) {
      if (core_set.count(v))
        CHECK(cover.count(v) == 0);
      else
        CHECK(cover[v] == 1);
    }
  }
}

TEST_CASE("pairwise-intersecting subtrees share a vertex (randomized)") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 3 + static_cast<int>(rng() % 15);
    std::vector<VertexId> names;
    for (int i = 0; i < n; ++i) names.push_back("t" + std::to_string(i));
    std::map<VertexId, std::vector<VertexId>> adj;
    for (int i = 1; i < n; ++i) {
      int p = static_cast<int>(rng() % i);
      adj[names[i]].push_back(names[p]);
      adj[names[p]].push_back(names[i]);
    }
    for (auto& [v, ns] : adj) std::sort(ns.begin(), ns.end());
    std::set<VertexId> all(names.begin(), names.end());
    auto tree = TreeOrder::build(names[0], adj, all);

    // random subtrees: grow from a random seed vertex
    int count = 2 + static_cast<int>(rng() % 6);
    std::vector<std::set<VertexId>> subs;
    for (int s = 0; s < count; ++s) {
      std::set<VertexId> sub{names[rng() % n]};
      int grow = static_cast<int>(rng() % n);
      for (int gstep = 0; gstep < grow; ++gstep) {
        std::vector<VertexId> frontier;
        for (const auto& v : sub)
          for (const auto& w : adj[v])
            if (!sub.count(w)) frontier.push_back(w);
        if (frontier.empty()) break;
        std::sort(frontier.begin(), frontier.end());
        sub.insert(frontier[rng() % frontier.size()]);
      }
      subs.push_back(sub);
    }
    bool pairwise = true;
    for (size_t i = 0; i < subs.size() && pairwise; ++i)
      for (size_t j = i + 1; j < subs.size() && pairwise; ++j) {
        bool meet = false;
        for (const auto& v : subs[i])
          if (subs[j].count(v)) { meet = true; break; }
        if (!meet) pairwise = false;
      }
    if (!pairwise) continue;
    std::set<VertexId> inter = subs[0];
    for (const auto& sub : subs) {
      std::set<VertexId> next;
      for (const auto& v : inter)
        if (sub.count(v)) next.insert(v);
      inter = next;
    }
    CHECK(!inter.empty());
    // the intersection is itself a subtree: the whole tree path between any
    // two of its vertices stays inside
    for (const auto& a : inter)
      for (const auto& b : inter) {
        auto m = tree.meet(a, b);
        for (const auto& leg : {a, b})
          for (const auto& v : tree.saturated_chain(m, leg))
            CHECK(inter.count(v) == 1);
      }
  }
}
