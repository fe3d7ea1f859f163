#pragma once

// Seeded random ontologies for property tests and benchmarks.

#include <cstdint>

#include "elhgeo/syntax.hpp"

namespace elhgeo {

struct GeneratorLimits {
  std::size_t max_concepts = 4;     // drawn from A, B, C, ...
  std::size_t max_roles = 2;        // r, s, t, ...
  std::size_t max_individuals = 3;  // a, b, c, ...
  std::size_t max_axioms = 8;
};

/// A normalized, ⊥-free ontology. The numbers of concept names, roles,
/// individuals and axioms are drawn uniformly up to the limits (at least one
/// concept name), then each axiom picks a shape uniformly among those the
/// drawn names allow: the four CI normal forms, RIs, atomic concept
/// assertions and role assertions. The same seed gives the same ontology.
Ontology random_normalized_ontology(std::uint64_t seed,
                                    const GeneratorLimits& limits = {});

}  // namespace elhgeo
