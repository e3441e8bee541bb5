#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "wperp/presentation.hpp"
#include "wperp/types.hpp"

using namespace wperp;

namespace {

CoxeterGraph path(const std::vector<VertexId>& vs,
                  const std::vector<int>& labels) {
  std::vector<EdgeSpec> edges;
  for (size_t i = 0; i + 1 < vs.size(); ++i)
    edges.push_back({vs[i], vs[i + 1], Label::finite(labels[i])});
  return CoxeterGraph::build(edges, vs);
}

std::vector<VertexId> names(int n) {
  std::vector<VertexId> vs;
  for (int i = 1; i <= n; ++i) vs.push_back("x" + std::to_string(i));
  return vs;
}

CoxeterGraph p_shape(int m) {
  return CoxeterGraph::build({{"x1", "x2", Label::finite(m)},
                              {"x2", "x3", Label::finite(3)},
                              {"x3", "x4", Label::finite(3)},
                              {"x1", "x3", Label::infinity()}},
                             {});
}

EdgePair pr(const char* y, const char* s) { return {y, s}; }

// Coxeter graph on the generator classes, per the derived order matrix.
CoxeterGraph orders_graph(const PerpPresentation& p) {
  std::vector<VertexId> vs;
  for (size_t i = 0; i < p.classes.size(); ++i)
    vs.push_back("c" + std::to_string(i));
  std::vector<EdgeSpec> edges;
  for (size_t i = 0; i < p.classes.size(); ++i)
    for (size_t j = i + 1; j < p.classes.size(); ++j) {
      Label k = p.orders[i][j];
      if (k.is_infinite() || k.finite_value() >= 3)
        edges.push_back({vs[i], vs[j], k});
    }
  return CoxeterGraph::build(edges, vs);
}

long long presented_order(const PerpPresentation& p) {
  auto g = orders_graph(p);
  long long total = 1;
  for (const auto& comp : g.components())
    total *= finite_group_order(classify_irreducible(g, comp));
  return total;
}

}  // namespace

TEST_CASE("edge pairs: anchored in the odd component, even finite label") {
  auto a3 = path(names(3), {3, 3});
  CHECK(edge_pairs(a3, "x1") ==
        std::vector<EdgePair>{pr("x1", "x3"), pr("x3", "x1")});

  auto b2 = path(names(2), {4});
  CHECK(edge_pairs(b2, "x1") == std::vector<EdgePair>{pr("x1", "x2")});

  // infinite labels never form a pair
  auto p5 = p_shape(5);
  CHECK(edge_pairs(p5, "x1") ==
        std::vector<EdgePair>{pr("x1", "x4"), pr("x2", "x4"), pr("x4", "x1"),
                              pr("x4", "x2")});

  // odd dihedral: no even label at all
  auto i5 = path(names(2), {5});
  CHECK(edge_pairs(i5, "x1").empty());

  // the anchor must lie in the odd component of x
  auto split = CoxeterGraph::build({{"x1", "x2", Label::finite(3)},
                                    {"x3", "x4", Label::finite(3)},
                                    {"x2", "x3", Label::finite(4)}},
                                   {});
  for (const auto& p : edge_pairs(split, "x1"))
    CHECK((p.y == "x1" || p.y == "x2"));
}

TEST_CASE("three-generator chains: one merged class or two commuting ones") {
  // all labels 3: the swapped pairs merge through the middle vertex
  auto a3 = path(names(3), {3, 3});
  auto p = perp_presentation(a3, "x1");
  REQUIRE(p.classes.size() == 1);
  CHECK(p.classes[0].members ==
        std::vector<EdgePair>{pr("x1", "x3"), pr("x3", "x1")});
  CHECK(p.classes[0].uniform_root_certified);
  CHECK(p.supported);
  CHECK(p.y_rank == 0);
  CHECK(p.orders == std::vector<std::vector<Label>>{{Label::finite(1)}});
  // both members realize the same root: alpha_3 exactly
  FormMatrix B = geometric_form(a3);
  RootVector g1 = gamma_root(a3, B, "x1", pr("x1", "x3"));
  RootVector g2 = gamma_root(a3, B, "x1", pr("x3", "x1"));
  CHECK((g1 - g2).norm() < 1e-12);
  CHECK(g1[0] == doctest::Approx(0.0));
  CHECK(g1[1] == doctest::Approx(0.0));
  CHECK(g1[2] == doctest::Approx(1.0));

  // labels (3,5): the swap only forces product order 2
  auto h3 = path(names(3), {3, 5});
  auto ph = perp_presentation(h3, "x1");
  REQUIRE(ph.classes.size() == 2);
  CHECK(ph.orders[0][1] == 2);
  CHECK(presented_order(ph) == 4);  // two commuting reflections
}

TEST_CASE("chain of four, all labels 3: two classes with product order 3") {
  auto a4 = path(names(4), {3, 3, 3});
  auto p = perp_presentation(a4, "x1");
  REQUIRE(p.classes.size() == 2);
  CHECK(p.classes[0].members ==
        std::vector<EdgePair>{pr("x1", "x3"), pr("x3", "x1"),
                              pr("x4", "x1")});
  CHECK(p.classes[1].members ==
        std::vector<EdgePair>{pr("x1", "x4"), pr("x2", "x4"),
                              pr("x4", "x2")});
  CHECK(p.orders[0][1] == 3);
  CHECK(p.supported);
  CHECK(presented_order(p) == 6);

  // every member of a class realizes one root
  FormMatrix B = geometric_form(a4);
  for (const auto& c : p.classes) {
    RootVector ref = gamma_root(a4, B, "x1", c.members.front());
    for (const auto& m : c.members)
      CHECK((gamma_root(a4, B, "x1", m) - ref).norm() < 1e-8);
  }
}

TEST_CASE("chain (3,3,5): the orthogonal group is the (3,5) triangle group") {
  auto h4 = path(names(4), {3, 3, 5});
  auto p = perp_presentation(h4, "x1");
  REQUIRE(p.classes.size() == 3);
  CHECK(p.classes[0].members ==
        std::vector<EdgePair>{pr("x1", "x3"), pr("x3", "x1"),
                              pr("x4", "x1")});
  CHECK(p.classes[1].members ==
        std::vector<EdgePair>{pr("x1", "x4"), pr("x2", "x4")});
  CHECK(p.classes[2].members == std::vector<EdgePair>{pr("x4", "x2")});
  CHECK(p.orders[0][1] == 5);
  CHECK(p.orders[0][2] == 3);
  CHECK(p.orders[1][2] == 2);
  auto og = orders_graph(p);
  CHECK(classify_irreducible(og, og.components()[0]).name() == "H3");
  CHECK(presented_order(p) == 120);
}

TEST_CASE("chains with a 4: commuting pieces split off") {
  // (3,4): two classes, order 2 via the 4-step pattern
  auto b3 = path(names(3), {3, 4});
  auto p3 = perp_presentation(b3, "x1");
  REQUIRE(p3.classes.size() == 2);
  CHECK(p3.orders[0][1] == 2);
  CHECK(presented_order(p3) == 4);

  // (3,3,4): three classes, one 4-labeled edge between two of them
  auto b4 = path(names(4), {3, 3, 4});
  auto p4 = perp_presentation(b4, "x1");
  REQUIRE(p4.classes.size() == 3);
  std::multiset<int> offdiag;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j)
      offdiag.insert(p4.orders[i][j].finite_value());
  CHECK(offdiag == std::multiset<int>{2, 2, 4});
  CHECK(presented_order(p4) == 16);

  // (3,4,3): three classes forming a (3,4) chain
  auto f4 = path(names(4), {3, 4, 3});
  auto pf = perp_presentation(f4, "x1");
  REQUIRE(pf.classes.size() == 3);
  auto og = orders_graph(pf);
  REQUIRE(og.components().size() == 1);
  CHECK(classify_irreducible(og, og.components()[0]).name() == "B3");
  CHECK(presented_order(pf) == 48);
}

TEST_CASE("rank-4 fork, all 3s: three pairwise-commuting classes") {
  auto d4 = CoxeterGraph::build({{"x1", "x2", Label::finite(3)},
                                 {"x2", "x3", Label::finite(3)},
                                 {"x2", "x4", Label::finite(3)}},
                                {});
  auto p = perp_presentation(d4, "x1");
  REQUIRE(p.classes.size() == 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j)
      CHECK(p.orders[i][j] == 2);
  CHECK(presented_order(p) == 8);
}

TEST_CASE("infinite-chord shape: dihedral orthogonal group of order 2m") {
  for (int m : {3, 5, 7}) {
    CAPTURE(m);
    auto g = p_shape(m);
    auto p = perp_presentation(g, "x1");
    CHECK(p.supported);
    CHECK(p.y_rank == 0);
    REQUIRE(p.classes.size() == 2);
    CHECK(p.classes[0].members ==
          std::vector<EdgePair>{pr("x1", "x4"), pr("x2", "x4"),
                                pr("x4", "x2")});
    CHECK(p.classes[1].members == std::vector<EdgePair>{pr("x4", "x1")});
    CHECK(p.orders[0][1] == m);

    // root coherence inside the merged class, and the claimed product order
    // recovered from the numeric inner product: two independent routes
    FormMatrix B = geometric_form(g);
    RootVector r0 = gamma_root(g, B, "x1", p.classes[0].members.front());
    for (const auto& mem : p.classes[0].members)
      CHECK((gamma_root(g, B, "x1", mem) - r0).norm() < 1e-8);
    RootVector r1 = gamma_root(g, B, "x1", p.classes[1].representative());
    CHECK(r0.dot(B * r0) == doctest::Approx(1.0));
    CHECK(r1.dot(B * r1) == doctest::Approx(1.0));
    RootVector ax = simple_root(4, g.index_of("x1"));
    CHECK(std::abs(ax.dot(B * r0)) < 1e-10);
    CHECK(std::abs(ax.dot(B * r1)) < 1e-10);
    CHECK(order_from_inner_product(r0.dot(B * r1)) == m);
  }
  // the transported root of the singleton class, spelled out for m = 3
  auto g3 = p_shape(3);
  FormMatrix B = geometric_form(g3);
  RootVector r = gamma_root(g3, B, "x1", pr("x4", "x1"));
  CHECK(r[0] == doctest::Approx(12.0));
  CHECK(r[1] == doctest::Approx(14.0));
  CHECK(r[2] == doctest::Approx(5.0));
  CHECK(r[3] == doctest::Approx(2.0));
}

TEST_CASE("odd 4-cycle with chords: certification fails, unsupported") {
  auto g = CoxeterGraph::build({{"a", "b", Label::finite(3)},
                                {"b", "c", Label::finite(3)},
                                {"c", "d", Label::finite(3)},
                                {"a", "d", Label::finite(3)}},
                               {});
  auto p = perp_presentation(g, "a");
  CHECK(p.y_rank == 1);
  REQUIRE(p.classes.size() == 2);
  for (const auto& c : p.classes) CHECK(!c.uniform_root_certified);
  CHECK(!p.supported);
}

TEST_CASE("bipyramid shapes: cycle rank grows with the equator") {
  auto bipyramid = [](int equator) {
    std::vector<EdgeSpec> edges;
    for (int i = 1; i <= equator; ++i) {
      VertexId k = "k" + std::to_string(i);
      edges.push_back({"p1", k, Label::finite(3)});
      edges.push_back({"p2", k, Label::finite(3)});
      for (int j = 1; j < i; ++j)
        edges.push_back({"k" + std::to_string(j), k, Label::infinity()});
    }
    return CoxeterGraph::build(edges, {});
  };
  auto g4 = bipyramid(2);  // 4 vertices in the cycle
  auto p4 = perp_presentation(g4, "k1");
  CHECK(p4.y_rank == 1);
  auto g5 = bipyramid(3);
  auto p5 = perp_presentation(g5, "k1");
  CHECK(p5.y_rank == 2);
  // the apex pair commutes and its class survives as a generator
  CHECK(class_index_of(p4, pr("p1", "p2")) >= 0);
}

TEST_CASE("transport words: alternating segments along the odd tree") {
  auto a3 = path(names(3), {3, 3});
  auto tree = odd_spanning_tree(a3, "x1");
  CHECK(transport_word(a3, tree, "x1").empty());
  CHECK(transport_word(a3, tree, "x3") ==
        std::vector<VertexId>{"x2", "x1", "x3", "x2"});

  // a 5-labeled step contributes four letters
  auto h3 = path(names(3), {3, 5});
  auto th = odd_spanning_tree(h3, "x1");
  CHECK(transport_word(h3, th, "x3") ==
        std::vector<VertexId>{"x2", "x1", "x3", "x2", "x3", "x2"});
}

TEST_CASE("dihedral perpendicular roots by label") {
  auto g = CoxeterGraph::build({{"y", "s", Label::finite(6)},
                                {"y", "t", Label::finite(4)},
                                {"y", "u", Label::finite(3)}},
                               {"w"});
  auto e2 = dihedral_perp_root(g, pr("y", "w"));  // label 2
  CHECK(e2.word.empty());
  CHECK(e2.base == "w");
  auto e4 = dihedral_perp_root(g, pr("y", "t"));
  CHECK(e4.word == std::vector<VertexId>{"t"});
  CHECK(e4.base == "y");
  auto e6 = dihedral_perp_root(g, pr("y", "s"));
  CHECK(e6.word == std::vector<VertexId>{"s", "y"});
  CHECK(e6.base == "s");
  CHECK_THROWS_AS(dihedral_perp_root(g, pr("y", "u")), Error);

  // each result is orthogonal to alpha_y under the form
  FormMatrix B = geometric_form(g);
  for (const auto& e : {e2, e4, e6}) {
    RootVector r = evaluate(g, B, e);
    RootVector ay = simple_root(g.size(), g.index_of("y"));
    CHECK(std::abs(ay.dot(B * r)) < 1e-10);
    CHECK(r.dot(B * r) == doctest::Approx(1.0));
  }
}

TEST_CASE("derived structure matches the numeric engine, all generators") {
  std::vector<CoxeterGraph> suite;
  suite.push_back(path(names(3), {3, 3}));
  suite.push_back(path(names(4), {3, 3, 3}));
  suite.push_back(path(names(5), {3, 3, 3, 3}));
  suite.push_back(path(names(2), {4}));
  suite.push_back(path(names(3), {3, 4}));
  suite.push_back(path(names(4), {3, 3, 4}));
  suite.push_back(path(names(3), {3, 5}));
  suite.push_back(path(names(4), {3, 3, 5}));
  suite.push_back(path(names(4), {3, 4, 3}));
  suite.push_back(CoxeterGraph::build({{"x1", "x2", Label::finite(3)},
                                       {"x2", "x3", Label::finite(3)},
                                       {"x2", "x4", Label::finite(3)}},
                                      {}));
  suite.push_back(path(names(2), {6}));
  for (const auto& g : suite) {
    auto G = enumerate_group(g);
    FormMatrix B = geometric_form(g);
    for (const auto& x : g.vertices()) {
      CAPTURE(g.to_text());
      CAPTURE(x);
      auto p = perp_presentation(g, x);
      REQUIRE(p.supported);

      // (1) class roots coincide with the canonical generators of the
      //     numerically computed orthogonal subsystem
      int xi = g.index_of(x);
      auto perp = perp_positive_roots(B, G.roots, xi);
      auto simples = canonical_perp_simples(B, G.roots, perp);
      REQUIRE(simples.size() == p.classes.size());
      std::set<int> expect(simples.begin(), simples.end());
      std::set<int> got;
      std::vector<RootVector> roots;
      for (const auto& c : p.classes) {
        RootVector r = gamma_root(g, B, x, c.representative());
        roots.push_back(r);
        auto hit = G.roots.locate(r);
        REQUIRE(hit.has_value());
        CHECK(hit->second == +1);  // the realized roots are positive
        got.insert(hit->first);
      }
      CHECK(got == expect);

      // (2) the pattern-derived order matrix equals the one recovered from
      //     numeric inner products of the class roots
      auto M = pairwise_orders(B, roots);
      for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = 0; j < roots.size(); ++j)
          CHECK(M[i][j] == p.orders[i][j]);

      // (3) group order of the presented Coxeter type equals the order of
      //     the subgroup generated by all orthogonal reflections
      std::vector<SignedPerm> gens;
      for (int r : perp) gens.push_back(root_reflection(B, G.roots, r));
      CHECK(subgroup_order(G.roots.count(), gens) == presented_order(p));

      // (4) centralizer order = 2 * orthogonal order (acyclic odd parts)
      CHECK(p.y_rank == 0);
      CHECK(centralizer_order_of_generator(G, xi) ==
            2 * presented_order(p));
    }
  }
}

TEST_CASE("relation instances never claim two different finite orders") {
  std::vector<CoxeterGraph> suite;
  suite.push_back(path(names(5), {3, 3, 3, 3}));
  suite.push_back(path(names(4), {3, 3, 5}));
  suite.push_back(p_shape(5));
  suite.push_back(CoxeterGraph::build({{"a", "b", Label::finite(3)},
                                       {"b", "c", Label::finite(3)},
                                       {"c", "d", Label::finite(3)},
                                       {"a", "d", Label::finite(3)}},
                                      {}));
  for (const auto& g : suite)
    for (const auto& x : g.vertices()) {
      std::map<std::pair<EdgePair, EdgePair>, Label> seen;
      for (const auto& inst : relation_instances(g, x)) {
        if (inst.k == 1) continue;
        auto key = std::make_pair(inst.left, inst.right);
        auto hit = seen.find(key);
        if (hit == seen.end())
          seen.emplace(key, inst.k);
        else
          CHECK(hit->second == inst.k);
      }
      // and the class computation accepts them all
      CHECK_NOTHROW(perp_presentation(g, x));
    }
}

TEST_CASE("presentation commutes with renaming") {
  auto g = path(names(4), {3, 3, 5});
  std::map<VertexId, VertexId> ren{{"x1", "q"}, {"x2", "a"},
                                   {"x3", "z"}, {"x4", "m"}};
  auto h = g.relabeled(ren);
  auto pg = perp_presentation(g, "x1");
  auto ph = perp_presentation(h, "q");
  CHECK(pg.classes.size() == ph.classes.size());
  CHECK(pg.y_rank == ph.y_rank);
  CHECK(pg.supported == ph.supported);
  // class membership maps through the renaming
  for (const auto& c : pg.classes) {
    EdgePair image{ren.at(c.representative().y), ren.at(c.representative().s)};
    int ci = class_index_of(ph, image);
    REQUIRE(ci >= 0);
    CHECK(ph.classes[ci].members.size() == c.members.size());
  }
  // order multisets agree
  std::multiset<std::string> a, b;
  for (size_t i = 0; i < pg.classes.size(); ++i)
    for (size_t j = i + 1; j < pg.classes.size(); ++j) {
      a.insert(pg.orders[i][j].to_string());
      b.insert(ph.orders[i][j].to_string());
    }
  CHECK(a == b);
}
