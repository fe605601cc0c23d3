#pragma once

// The Alexander module of a knot, presented by one quandle relation per
// crossing (rows) in the arc colours (columns), with the variable t = m.
//
// A positive crossing with over-arc g3, incoming under-arc g1 and outgoing
// under-arc g2 contributes g1 - m g2 - (1 - m) g3. At a negative crossing the
// under arcs trade places: g2 - m g1 - (1 - m) g3.
//
// Only the torsion part of H_1 of the infinite cyclic cover is presented
// directly; the free summand Z[m^+-1] corresponds to the all-ones kernel
// vector of the matrix and is not computed.

#include <vector>

#include "kch/knot_diagram.hpp"
#include "kch/laurent.hpp"
#include "kch/presentation.hpp"

namespace kch {

  using AlexMatrix = LaurentMatrix;

  AlexMatrix quandle_matrix(KnotDiagram const& d);

  // gcd of the (n-1)-minors after deleting one column, normalized. The empty
  // matrix (unknot with no crossings) gives 1. Throws DegenerateMatrix when
  // every minor vanishes.
  LaurentPoly alexander_polynomial(AlexMatrix const& m);

  // Fox calculus: Jacobian of the relators abelianized through the degree
  // map sending the meridian to t, one column of degree +-1 deleted, gcd of
  // the maximal minors.
  AlexMatrix fox_jacobian(GroupPresentation const& p, std::vector<int> const& degrees);
  LaurentPoly fox_oracle(GroupPresentation const& p, PeripheralSystem const& ps);

  // gcds of the k x k minors for k = n-1, n-2, ... while they are not units.
  std::vector<LaurentPoly> module_invariants(AlexMatrix const& m);

}  // namespace kch
