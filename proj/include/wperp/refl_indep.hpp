// Reflection independence checks.
//
// A group is reflection independent when every group isomorphism onto
// another Coxeter group carries reflections to reflections, regardless of
// the chosen generating sets.  Everything here is a sufficient condition:
// the verdict is either ReflectionIndependent or Inconclusive, never a
// disproof.
//
// Three rules, tried in order by check_group:
//   - TwoSpherical: the group is infinite, the graph is connected, and every
//     label is finite.
//   - OddConnected: the group is infinite and the odd graph is connected
//     (all generators conjugate).
//   - PerGenerator: one conjugacy class at a time, via the shape of the
//     finite part of the reflection-perpendicular subgroup: it must be
//     trivial, or a single reflection certified conjugate to the generator.
// Finite groups always take the per-generator route.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "wperp/finite_part.hpp"
#include "wperp/graph.hpp"

namespace wperp {

enum class RIRule { kTwoSpherical, kOddConnected, kPerGenerator };
std::string to_string(RIRule r);

enum class RIOverall { kReflectionIndependent, kInconclusive };
std::string to_string(RIOverall o);

struct ClassVerdict {
  bool holds = false;
  std::string reason;
};

struct RIVerdict {
  RIOverall overall = RIOverall::kInconclusive;
  RIRule rule_used = RIRule::kPerGenerator;
  // One entry per conjugacy class of generators, keyed by the class
  // representative.  Filled whichever rule decided the overall verdict.
  std::map<VertexId, ClassVerdict> per_class;
};

// Lexicographically least vertex of each odd-graph component; generators are
// conjugate exactly when they share a component.
std::vector<VertexId> class_representatives(const CoxeterGraph& g);

// The per-generator sufficient condition: the finite part of the
// perpendicular subgroup is trivial, or consists of one reflection whose
// conjugacy to x is certified combinatorially (a label-2 pair inside the odd
// component, or any single-reflection outcome of the inside-O cases).
ClassVerdict sufficient_condition(const CoxeterGraph& g, const VertexId& x);

// Full verdict for the group, global rules first, then per class.
RIVerdict check_group(const CoxeterGraph& g);

}  // namespace wperp
