#include "wperp/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wperp/corpus.hpp"
#include "wperp/error.hpp"
#include "wperp/json_io.hpp"
#include "wperp/oracle.hpp"
#include "wperp/types.hpp"

namespace wperp {

namespace {

struct RunConfig {
  std::string input;
  std::string x;
  std::string format = "json";
  double tol = 1e-8;
  int root_cap = 20000;
  int elem_cap = 200000;
  bool dot = false;
  // corpus generation
  std::uint64_t seed = 1;
  int count = 100;
  int max_rank = 7;
  std::string labels = "2,3,4,5,inf";
};

std::string read_input(const std::string& path) {
  if (path.empty()) throw Error("no input graph (positional or --input)");
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

CoxeterGraph load_graph(const RunConfig& cfg) {
  return parse_graph(read_input(cfg.input));
}

VertexId checked_vertex(const CoxeterGraph& g, const std::string& x) {
  const auto& vs = g.vertices();
  if (!std::binary_search(vs.begin(), vs.end(), x))
    throw Error("unknown vertex '" + x + "'");
  return x;
}

int index_of(const CoxeterGraph& g, const VertexId& x) {
  const auto& vs = g.vertices();
  return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), x) -
                          vs.begin());
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  CoxeterGraph g = load_graph(cfg);
  if (cfg.dot)
    out << dot_graph(g);
  else if (cfg.format == "text")
    out << analyze_text(g);
  else
    out << dump_json(graph_report(g));
  return 0;
}

int cmd_perp(const RunConfig& cfg, std::ostream& out) {
  CoxeterGraph g = load_graph(cfg);
  PerpPresentation p = perp_presentation(g, checked_vertex(g, cfg.x));
  if (cfg.format == "text")
    out << perp_text(g, p);
  else
    out << dump_json(perp_report(g, p));
  return p.supported ? 0 : 2;
}

int cmd_finpart(const RunConfig& cfg, std::ostream& out) {
  CoxeterGraph g = load_graph(cfg);
  FinitePartReport r = finite_part(g, checked_vertex(g, cfg.x));
  if (cfg.format == "text")
    out << finpart_text(g, r);
  else
    out << dump_json(finpart_report(g, r));
  return 0;
}

int cmd_reflindep(const RunConfig& cfg, std::ostream& out) {
  CoxeterGraph g = load_graph(cfg);
  RIVerdict v = check_group(g);
  if (cfg.format == "text")
    out << reflindep_text(v);
  else
    out << dump_json(reflindep_report(v));
  return 0;
}

// Numeric route only; everything below the perp section needs a complete
// root system, so infinite groups stop early with a marker.
int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  CoxeterGraph g = load_graph(cfg);
  VertexId x = checked_vertex(g, cfg.x);
  FormMatrix B = geometric_form(g);
  RootSystem rs = enumerate_roots(B, cfg.root_cap);
  Json j;
  j["x"] = x;
  j["root_count"] = rs.count();
  j["complete"] = rs.complete;
  if (!rs.complete) {
    j["note"] = "root closure hit the cap; the numeric route only covers "
                "finite groups";
    out << dump_json(j);
    return 2;
  }
  FiniteGroup G = enumerate_group(g, cfg.root_cap, cfg.elem_cap);
  j["group_order"] = G.order();
  int xi = index_of(g, x);
  j["centralizer_order"] = centralizer_order_of_generator(G, xi);

  std::vector<int> perp = perp_positive_roots(B, rs, xi);
  std::vector<int> simples = canonical_perp_simples(B, rs, perp);
  j["perp_positive_count"] = static_cast<int>(perp.size());
  std::vector<RootVector> sroots;
  Json sims = Json::array();
  for (int idx : simples) {
    sroots.push_back(rs.positives[idx]);
    sims.push_back(root_json(g, rs.positives[idx]));
  }
  j["perp_simples"] = sims;
  Json orders = Json::array();
  for (const auto& row : pairwise_orders(B, sroots)) {
    Json r = Json::array();
    for (const auto& m : row) r.push_back(label_json(m));
    orders.push_back(r);
  }
  j["perp_orders"] = orders;
  std::vector<SignedPerm> gens;
  for (int idx : perp) gens.push_back(root_reflection(B, rs, idx));
  j["perp_order"] = subgroup_order(rs.count(), gens, cfg.elem_cap);
  out << dump_json(j);
  return 0;
}

// Compare the combinatorial presentation against the numeric oracle at one
// generator: the class roots must match the canonical perpendicular simples
// bijectively within tol, and the two order matrices must agree under that
// pairing.  Exit 0 iff they do.
int cmd_crosscheck(const RunConfig& cfg, std::ostream& out) {
  CoxeterGraph g = load_graph(cfg);
  VertexId x = checked_vertex(g, cfg.x);
  FormMatrix B = geometric_form(g);
  RootSystem rs = enumerate_roots(B, cfg.root_cap);
  Json j;
  j["x"] = x;
  if (!rs.complete) {
    j["note"] = "root closure hit the cap; crosscheck covers finite groups";
    out << dump_json(j);
    return 2;
  }
  PerpPresentation p = perp_presentation(g, x);
  j["supported"] = p.supported;
  if (!p.supported) {
    j["note"] = "presentation not certified: some class lacks a uniform root";
    out << dump_json(j);
    return 2;
  }

  int xi = index_of(g, x);
  std::vector<int> simples =
      canonical_perp_simples(B, rs, perp_positive_roots(B, rs, xi));
  j["classes"] = static_cast<int>(p.classes.size());
  j["oracle_simples"] = static_cast<int>(simples.size());

  bool match = p.classes.size() == simples.size();
  std::vector<RootVector> paired;  // oracle simple matched to class i
  std::vector<bool> used(simples.size(), false);
  Json pairing = Json::array();
  for (std::size_t i = 0; match && i < p.classes.size(); ++i) {
    RootVector v =
        evaluate(g, B, root_expression(g, x, p.classes[i].representative()));
    bool found = false;
    for (std::size_t k = 0; k < simples.size(); ++k) {
      if (used[k]) continue;
      if ((rs.positives[simples[k]] - v).lpNorm<Eigen::Infinity>() < cfg.tol) {
        used[k] = true;
        paired.push_back(rs.positives[simples[k]]);
        pairing.push_back(Json::array(
            {static_cast<int>(i), static_cast<int>(simples[k])}));
        found = true;
        break;
      }
    }
    match = match && found;
  }
  if (match) {
    std::vector<std::vector<Label>> oracle_orders = pairwise_orders(B, paired);
    for (std::size_t i = 0; i < p.orders.size(); ++i)
      for (std::size_t k = 0; k < p.orders.size(); ++k)
        match = match && p.orders[i][k] == oracle_orders[i][k];
  }
  j["pairing"] = pairing;
  j["match"] = match;
  out << dump_json(j);
  return match ? 0 : 1;
}

int cmd_corpus(const RunConfig& cfg, std::ostream& out) {
  CorpusOptions opt;
  opt.seed = cfg.seed;
  opt.count = cfg.count;
  opt.max_rank = cfg.max_rank;
  opt.label_pool.clear();
  std::istringstream ls(cfg.labels);
  std::string tok;
  while (std::getline(ls, tok, ','))
    if (!tok.empty()) opt.label_pool.push_back(Label::from_string(tok));
  if (opt.label_pool.empty()) throw Error("empty label pool");
  out << corpus_text(opt);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"orthogonal-subgroup analyses of Coxeter graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--tol", cfg.tol, "numeric comparison tolerance");
  app.add_option("--max-roots", cfg.root_cap, "root closure cap");
  app.add_option("--max-group", cfg.elem_cap, "group closure cap");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("graph", cfg.input, "graph file, or - for stdin");
    sub->add_option("--input", cfg.input,
                    "graph file, or - for stdin (same as the positional)");
  };
  auto add_x = [&](CLI::App* sub) {
    sub->add_option("--x", cfg.x, "generator to analyse")->required();
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "components, odd graph, classified types");
  add_input(analyze);
  analyze->add_flag("--dot", cfg.dot, "emit Graphviz instead of a report");

  CLI::App* perp = app.add_subcommand(
      "perp", "presentation of the orthogonal subgroup at --x");
  add_input(perp);
  add_x(perp);

  CLI::App* finpart = app.add_subcommand(
      "finpart", "finite part of the orthogonal subgroup at --x");
  add_input(finpart);
  add_x(finpart);

  CLI::App* reflindep = app.add_subcommand(
      "reflindep", "reflection independence verdict for the whole group");
  add_input(reflindep);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "numeric root-system computation at --x (finite groups)");
  add_input(oracle);
  add_x(oracle);

  CLI::App* crosscheck = app.add_subcommand(
      "crosscheck", "presentation vs numeric oracle at --x");
  add_input(crosscheck);
  add_x(crosscheck);

  CLI::App* corpus = app.add_subcommand(
      "corpus", "seeded random connected graphs in the text format");
  corpus->add_option("--seed", cfg.seed, "stream seed");
  corpus->add_option("--count", cfg.count, "number of graphs");
  corpus->add_option("--max-rank", cfg.max_rank, "ranks drawn from [2, R]");
  corpus->add_option("--labels", cfg.labels,
                     "comma-separated pool, e.g. 2,3,4,5,inf");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);  // 0
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (perp->parsed()) return cmd_perp(cfg, out);
    if (finpart->parsed()) return cmd_finpart(cfg, out);
    if (reflindep->parsed()) return cmd_reflindep(cfg, out);
    if (oracle->parsed()) return cmd_oracle(cfg, out);
    if (crosscheck->parsed()) return cmd_crosscheck(cfg, out);
    if (corpus->parsed()) return cmd_corpus(cfg, out);
    err << "error: no subcommand\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wperp
