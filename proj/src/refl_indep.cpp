#include "wperp/refl_indep.hpp"

#include <algorithm>
#include <sstream>

#include "wperp/types.hpp"

namespace wperp {

namespace {

// True when no drawn edge carries the infinite label; absent edges commute,
// so this is exactly "every pairwise order is finite".
bool all_labels_finite(const CoxeterGraph& g) {
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.label(vs[i], vs[j]).is_finite()) return false;
    }
  }
  return true;
}

std::string describe_components(const std::vector<FinComponent>& comps) {
  std::ostringstream out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i > 0) out << ", ";
    out << to_string(comps[i].kind) << " on {";
    for (std::size_t j = 0; j < comps[i].vertices.size(); ++j) {
      if (j > 0) out << ",";
      out << comps[i].vertices[j];
    }
    out << "}";
  }
  return out.str();
}

}  // namespace

std::string to_string(RIRule r) {
  switch (r) {
    case RIRule::kTwoSpherical: return "two-spherical";
    case RIRule::kOddConnected: return "odd-connected";
    case RIRule::kPerGenerator: return "per-generator";
  }
  return "?";
}

std::string to_string(RIOverall o) {
  switch (o) {
    case RIOverall::kReflectionIndependent: return "reflection-independent";
    case RIOverall::kInconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<VertexId> class_representatives(const CoxeterGraph& g) {
  OddGraph odd(g);
  std::vector<VertexId> reps;
  for (const auto& comp : odd.components()) {
    reps.push_back(*std::min_element(comp.begin(), comp.end()));
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

ClassVerdict sufficient_condition(const CoxeterGraph& g, const VertexId& x) {
  FinitePartReport report = finite_part(g, x);
  if (report.components.empty()) {
    return {true, "the perpendicular subgroup has trivial finite part"};
  }
  if (report.components.size() == 1 &&
      report.components[0].kind == FinComponentKind::kSingleReflection) {
    const FinComponent& c = report.components[0];
    // Certify that the lone reflection is conjugate to x.  Either its
    // defining pair commutes and sits inside the odd component (so the root
    // is an odd-path image of a simple root conjugate to x), or it came from
    // an inside-O case, whose defining vertex always does.
    bool commuting_in_o = g.label(c.pair.y, c.pair.s) == Label::finite(2) &&
                          report.partition.in_o(c.pair.y) &&
                          report.partition.in_o(c.pair.s);
    bool from_inside_o = c.provenance.rfind("in-O", 0) == 0;
    if (commuting_in_o || from_inside_o) {
      return {true, "the finite part is one reflection conjugate to the "
                    "generator (pair {" + c.pair.y + "," + c.pair.s + "})"};
    }
    return {false, "the finite part is one reflection but its conjugacy "
                   "class is not certified (pair {" + c.pair.y + "," +
                   c.pair.s + "} with label " +
                   g.label(c.pair.y, c.pair.s).to_string() + ")"};
  }
  return {false, "the finite part is not a single certified reflection: " +
                 describe_components(report.components)};
}

RIVerdict check_group(const CoxeterGraph& g) {
  RIVerdict v;
  for (const auto& rep : class_representatives(g)) {
    v.per_class.emplace(rep, sufficient_condition(g, rep));
  }

  bool infinite = !is_finite_group(g);
  // Global rules apply only to infinite groups; a finite group is decided
  // class by class (and typically stays inconclusive).
  if (infinite && g.components().size() == 1 && all_labels_finite(g)) {
    v.rule_used = RIRule::kTwoSpherical;
    v.overall = RIOverall::kReflectionIndependent;
    return v;
  }
  if (infinite && OddGraph(g).components().size() == 1) {
    v.rule_used = RIRule::kOddConnected;
    v.overall = RIOverall::kReflectionIndependent;
    return v;
  }
  v.rule_used = RIRule::kPerGenerator;
  bool all_hold = true;
  for (const auto& [rep, cv] : v.per_class) all_hold = all_hold && cv.holds;
  v.overall = all_hold ? RIOverall::kReflectionIndependent
                       : RIOverall::kInconclusive;
  return v;
}

}  // namespace wperp
