// Recognition of the finite irreducible Coxeter types plus the auxiliary
// rank-4 type P(m) (odd m: labels m,3,3 along a path, one infinite chord,
// whose perpendicular subgroups are dihedral).  A component that matches
// nothing is NotFiniteType.
//
// Normalizations: I2(3) -> A2, I2(4) -> B2, D3 -> A3, so every isomorphism
// class has exactly one tag.

#ifndef WPERP_TYPES_HPP
#define WPERP_TYPES_HPP

#include <string>
#include <vector>

#include "wperp/graph.hpp"

namespace wperp {

enum class TypeTag { A, B, D, E6, E7, E8, F4, H3, H4, I2, P, NotFiniteType };

std::string to_string(TypeTag tag);

struct IrreducibleType {
  TypeTag tag = TypeTag::NotFiniteType;
  int rank = 0;                  // number of vertices in the component
  Label m = Label();    // parameter of I2(m) / P(m); unused otherwise
  std::vector<VertexId> witness; // vertex ordering realizing the label pattern

  bool is_finite() const {
    return tag != TypeTag::NotFiniteType && tag != TypeTag::P;
  }
  // Display name: "A3", "I2(7)", "P(5)", "-" for NotFiniteType.
  std::string name() const;
};

// Does the ordered tuple realize the named type's label pattern exactly
// (every pair checked, including the implicit 2s)?  param_m carries the m of
// I2(m)/P(m) and is ignored for the other tags.
bool detect_sequence(const CoxeterGraph& g, const std::vector<VertexId>& seq,
                     TypeTag tag, Label param_m = Label());

// Classify one connected component of g.  The witness is the
// lexicographically least vertex ordering among those realizing the pattern.
IrreducibleType classify_irreducible(const CoxeterGraph& g,
                                     const std::vector<VertexId>& component);

// True iff every connected component of g classifies to a finite type.
bool is_finite_group(const CoxeterGraph& g);

// Order of the finite Coxeter group of the given type; throws Error when the
// type is not finite or the order exceeds the range of long long.
long long finite_group_order(const IrreducibleType& t);

}  // namespace wperp

#endif  // WPERP_TYPES_HPP
