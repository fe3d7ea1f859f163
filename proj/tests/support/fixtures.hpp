#pragma once

// The running example: O_ex = {A ⊑ B; A(a), B(b), r(a,b)} and its model I_ex
// with Δ = {d, e} (ids 0, 1), a ↦ d, b ↦ e.

#include "elhgeo/interpretation.hpp"
#include "elhgeo/syntax.hpp"

namespace elhgeo::testing {

inline Ontology o_ex() {
  return Ontology({subclass(atom("A"), atom("B")), instance(atom("A"), "a"),
                   instance(atom("B"), "b"), related("r", "a", "b")});
}

inline constexpr Element kD = 0;
inline constexpr Element kE = 1;

inline FiniteInterpretation i_ex() {
  FiniteInterpretation i(2);
  i.set_individual("a", kD);
  i.set_individual("b", kE);
  i.add_to_concept("A", kD);
  i.add_to_concept("B", kD);
  i.add_to_concept("B", kE);
  i.add_to_role("r", kD, kE);
  return i;
}

}  // namespace elhgeo::testing
