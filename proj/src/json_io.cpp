#include "wperp/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "wperp/types.hpp"

namespace wperp {

namespace {

Json pair_json(const EdgePair& p) { return Json::array({p.y, p.s}); }

Json vertex_list(const std::vector<VertexId>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(v);
  return arr;
}

Json word_json(const std::vector<VertexId>& word) { return vertex_list(word); }

Json factors_json(const std::vector<IrreducibleType>& ts) {
  Json arr = Json::array();
  for (const auto& t : ts) arr.push_back(t.name());
  return arr;
}

std::string join_names(const std::vector<VertexId>& vs,
                       const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += sep;
    out += vs[i];
  }
  return out;
}

}  // namespace

double snap12(double v) {
  if (std::abs(v) <= 1e-9) return 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

Json label_json(const Label& m) {
  if (m.is_infinite()) return "inf";
  return m.finite_value();
}

Json root_json(const CoxeterGraph& g, const RootVector& v) {
  Json obj = Json::object();
  const auto& vs = g.vertices();
  for (int i = 0; i < v.size(); ++i) {
    double c = snap12(v[i]);
    if (c != 0.0) obj[vs[i]] = c;
  }
  return obj;
}

Json graph_report(const CoxeterGraph& g) {
  Json j;
  j["rank"] = static_cast<int>(g.vertices().size());
  j["vertices"] = vertex_list(g.vertices());
  Json edges = Json::array();
  for (const auto& e : g.edges())
    edges.push_back(Json::array({e.a, e.b, label_json(e.m)}));
  j["edges"] = edges;

  Json comps = Json::array();
  for (const auto& comp : g.components()) {
    IrreducibleType t = classify_irreducible(g, comp);
    Json c;
    c["vertices"] = vertex_list(comp);
    c["finite"] = t.is_finite();
    c["type"] = t.tag == TypeTag::NotFiniteType ? Json() : Json(t.name());
    comps.push_back(c);
  }
  j["components"] = comps;

  Json odd = Json::array();
  for (const auto& comp : OddGraph(g).components())
    odd.push_back(vertex_list(comp));
  j["odd_components"] = odd;
  j["finite_group"] = is_finite_group(g);
  return j;
}

Json perp_report(const CoxeterGraph& g, const PerpPresentation& p) {
  Json j;
  j["x"] = p.x;
  j["supported"] = p.supported;
  j["odd_component"] = vertex_list(p.odd_component);
  j["y_rank"] = p.y_rank;

  FormMatrix B = geometric_form(g);
  Json classes = Json::array();
  for (const auto& cls : p.classes) {
    Json c;
    Json members = Json::array();
    for (const auto& m : cls.members) members.push_back(pair_json(m));
    c["members"] = members;
    c["representative"] = pair_json(cls.representative());
    c["uniform_root_certified"] = cls.uniform_root_certified;
    if (p.supported) {
      RootExpression e = root_expression(g, p.x, cls.representative());
      c["root"] = root_json(g, evaluate(g, B, e));
      c["word"] = word_json(e.word);
      c["base"] = e.base;
    }
    classes.push_back(c);
  }
  j["classes"] = classes;

  if (p.supported) {
    Json orders = Json::array();
    for (const auto& row : p.orders) {
      Json r = Json::array();
      for (const auto& m : row) r.push_back(label_json(m));
      orders.push_back(r);
    }
    j["orders"] = orders;
  } else {
    // Never a partial matrix: an uncertified class means the product orders
    // were not established, so the report carries a marker instead.
    j["note"] = "presentation not certified: some class lacks a uniform root";
  }
  return j;
}

Json finpart_report(const CoxeterGraph& g, const FinitePartReport& r) {
  Json j;
  j["x"] = r.x;
  Json part;
  part["o"] = vertex_list(r.partition.o);
  part["e"] = vertex_list(r.partition.e);
  part["rest"] = vertex_list(r.partition.rest);
  j["partition"] = part;
  j["trivial"] = r.trivial();

  FormMatrix B = geometric_form(g);
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json o;
    o["kind"] = to_string(c.kind);
    o["vertices"] = vertex_list(c.vertices);
    o["base"] = c.base;
    o["factors"] = factors_json(c.factors);
    o["order"] = component_order(c);
    o["provenance"] = c.provenance;
    if (c.kind == FinComponentKind::kSingleReflection) {
      o["pair"] = pair_json(c.pair);
      o["root"] = root_json(g, evaluate(g, B, c.root));
      o["word"] = word_json(c.root.word);
    }
    if (!c.note.empty()) o["note"] = c.note;
    comps.push_back(o);
  }
  j["components"] = comps;

  Json efin = Json::array();
  for (const auto& p : r.efin) efin.push_back(pair_json(p));
  j["efin"] = efin;

  Json trace = Json::array();
  for (const auto& t : r.case_trace) {
    Json o;
    o["predicate"] = t.predicate;
    o["holds"] = t.holds;
    if (!t.note.empty()) o["note"] = t.note;
    trace.push_back(o);
  }
  j["case_trace"] = trace;
  return j;
}

Json reflindep_report(const RIVerdict& v) {
  Json j;
  j["overall"] = to_string(v.overall);
  j["rule"] = to_string(v.rule_used);
  Json per = Json::object();
  for (const auto& [rep, cv] : v.per_class) {
    Json c;
    c["holds"] = cv.holds;
    c["reason"] = cv.reason;
    per[rep] = c;
  }
  j["per_class"] = per;
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

/*--------------------------------------------------------------------------
  Text renderings
 --------------------------------------------------------------------------*/

namespace {

std::string pair_text(const EdgePair& p) { return "(" + p.y + "," + p.s + ")"; }

// Render a label matrix as an aligned table with row/column headers.
std::string matrix_text(const std::vector<std::string>& headers,
                        const std::vector<std::vector<Label>>& rows) {
  std::vector<std::vector<std::string>> cells;
  std::size_t w = 0;
  for (const auto& h : headers) w = std::max(w, h.size());
  for (const auto& row : rows) {
    cells.emplace_back();
    for (const auto& m : row) {
      cells.back().push_back(m.to_string());
      w = std::max(w, cells.back().back().size());
    }
  }
  std::ostringstream os;
  os << std::string(w + 2, ' ');
  for (const auto& h : headers) os << std::setw(static_cast<int>(w) + 1) << h;
  os << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << std::setw(static_cast<int>(w) + 2) << headers[i];
    for (const auto& cell : cells[i])
      os << std::setw(static_cast<int>(w) + 1) << cell;
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string analyze_text(const CoxeterGraph& g) {
  std::ostringstream os;
  os << "rank " << g.vertices().size() << ": " << join_names(g.vertices())
     << "\n";
  for (const auto& e : g.edges())
    os << "edge " << e.a << " -- " << e.b << "  [" << e.m.to_string() << "]\n";
  for (const auto& comp : g.components()) {
    IrreducibleType t = classify_irreducible(g, comp);
    os << "component {" << join_names(comp) << "}: "
       << (t.tag == TypeTag::NotFiniteType ? std::string("not finite type")
                                           : t.name())
       << (t.is_finite() ? " (finite)" : " (infinite)") << "\n";
  }
  os << "odd components:";
  for (const auto& comp : OddGraph(g).components())
    os << " {" << join_names(comp) << "}";
  os << "\n";
  os << "group: " << (is_finite_group(g) ? "finite" : "infinite") << "\n";
  os << "\n" << dot_graph(g) << "\n" << dot_odd_graph(g);
  return os.str();
}

std::string perp_text(const CoxeterGraph& g, const PerpPresentation& p) {
  std::ostringstream os;
  os << "x = " << p.x << ", odd component {" << join_names(p.odd_component)
     << "}, cycle rank " << p.y_rank << "\n";
  if (!p.supported) {
    os << "not certified: some class lacks a uniform root\n";
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
      os << "  class c" << i << ": ";
      for (const auto& m : p.classes[i].members) os << pair_text(m) << " ";
      os << (p.classes[i].uniform_root_certified ? "[certified]"
                                                 : "[uncertified]")
         << "\n";
    }
    return os.str();
  }
  FormMatrix B = geometric_form(g);
  std::vector<std::string> headers;
  for (std::size_t i = 0; i < p.classes.size(); ++i)
    headers.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    const auto& cls = p.classes[i];
    os << "  " << headers[i] << " =";
    for (const auto& m : cls.members) os << " " << pair_text(m);
    RootVector v = evaluate(g, B, root_expression(g, p.x, cls.representative()));
    os << "   root";
    const auto& vs = g.vertices();
    for (int k = 0; k < v.size(); ++k)
      if (snap12(v[k]) != 0.0) os << " " << vs[k] << ":" << snap12(v[k]);
    os << "\n";
  }
  os << "orders:\n" << matrix_text(headers, p.orders);
  return os.str();
}

std::string finpart_text(const CoxeterGraph& g, const FinitePartReport& r) {
  std::ostringstream os;
  os << "x = " << r.x << "; O {" << join_names(r.partition.o) << "}; E {"
     << join_names(r.partition.e) << "}; rest {"
     << join_names(r.partition.rest) << "}\n";
  if (r.trivial()) {
    os << "finite part: trivial\n";
  } else {
    FormMatrix B = geometric_form(g);
    for (const auto& c : r.components) {
      os << "  " << to_string(c.kind) << " on {" << join_names(c.vertices)
         << "} order " << component_order(c) << " [" << c.provenance << "]";
      if (c.kind == FinComponentKind::kSingleReflection) {
        RootVector v = evaluate(g, B, c.root);
        os << " root";
        const auto& vs = g.vertices();
        for (int k = 0; k < v.size(); ++k)
          if (snap12(v[k]) != 0.0) os << " " << vs[k] << ":" << snap12(v[k]);
      }
      if (!c.note.empty()) os << " — " << c.note;
      os << "\n";
    }
    os << "absorbed pairs:";
    for (const auto& p : r.efin) os << " " << pair_text(p);
    os << "\n";
  }
  os << "trace:\n";
  for (const auto& t : r.case_trace) {
    os << "  [" << (t.holds ? "ok" : "--") << "] " << t.predicate;
    if (!t.note.empty()) os << " — " << t.note;
    os << "\n";
  }
  return os.str();
}

std::string reflindep_text(const RIVerdict& v) {
  std::ostringstream os;
  os << "overall: " << to_string(v.overall) << " (rule " << to_string(v.rule_used)
     << ")\n";
  for (const auto& [rep, cv] : v.per_class)
    os << "  class of " << rep << ": " << (cv.holds ? "holds" : "fails")
       << " — " << cv.reason << "\n";
  return os.str();
}

namespace {

std::string dot_render(const CoxeterGraph& g, const std::string& name,
                       bool odd_only) {
  std::ostringstream os;
  os << "graph " << name << " {\n  node [shape=circle];\n";
  for (const auto& v : g.vertices()) os << "  \"" << v << "\";\n";
  for (const auto& e : g.edges()) {
    if (odd_only && !e.m.is_odd()) continue;
    os << "  \"" << e.a << "\" -- \"" << e.b << "\"";
    if (!(e.m == Label::finite(3)))
      os << " [label=\"" << e.m.to_string() << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string dot_graph(const CoxeterGraph& g) {
  return dot_render(g, "coxeter", false);
}

std::string dot_odd_graph(const CoxeterGraph& g) {
  return dot_render(g, "coxeter_odd", true);
}

}  // namespace wperp
