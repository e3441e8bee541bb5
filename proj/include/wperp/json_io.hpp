// Deterministic renderings of the analysis reports.
//
// JSON is the stable machine contract: keys sorted (nlohmann objects are
// ordered maps), infinity encoded as the string "inf", floating point
// snapped to 12 significant digits with |v| <= 1e-9 flushed to zero, so two
// runs over the same input produce identical bytes.  The text renderings are
// for reading at a terminal and carry no stability promise.
#pragma once

#include <string>

#include "json.hpp"
#include "wperp/finite_part.hpp"
#include "wperp/graph.hpp"
#include "wperp/presentation.hpp"
#include "wperp/refl_indep.hpp"

namespace wperp {

using Json = nlohmann::json;

// 12-significant-digit snap; tiny magnitudes become exact zero.
double snap12(double v);

// An edge label as a JSON value: a number, or the string "inf".
Json label_json(const Label& m);

// A root vector as a sparse coordinate map keyed by generator name.
Json root_json(const CoxeterGraph& g, const RootVector& v);

// Structural summary: vertices, edges, drawn/odd components with their
// classified types, group finiteness.
Json graph_report(const CoxeterGraph& g);

// Orthogonal-subgroup presentation.  Unsupported presentations keep the
// class membership for diagnosis but carry no order matrix and no roots.
Json perp_report(const CoxeterGraph& g, const PerpPresentation& p);

// Finite part: partition, components (with realized roots where a single
// reflection is reported), absorbed pairs, and the full dispatch trace.
Json finpart_report(const CoxeterGraph& g, const FinitePartReport& r);

Json reflindep_report(const RIVerdict& v);

// dump with 2-space indentation and a trailing newline.
std::string dump_json(const Json& j);

// Text renderings.
std::string analyze_text(const CoxeterGraph& g);
std::string perp_text(const CoxeterGraph& g, const PerpPresentation& p);
std::string finpart_text(const CoxeterGraph& g, const FinitePartReport& r);
std::string reflindep_text(const RIVerdict& v);

// Graphviz renderings; label-3 edges are left unlabelled in the usual
// diagram convention.  The odd variant keeps only odd finite labels, so its
// connected components are the generator conjugacy classes.
std::string dot_graph(const CoxeterGraph& g);
std::string dot_odd_graph(const CoxeterGraph& g);

}  // namespace wperp
