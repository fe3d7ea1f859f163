#include <doctest.h>

#include <map>

#include "elhgeo/generators.hpp"

using namespace elhgeo;

TEST_CASE("generated ontologies stay in the envelope") {
  const GeneratorLimits limits;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Ontology o = random_normalized_ontology(seed);
    CAPTURE(seed);
    CHECK(is_normalized(o));
    CHECK_FALSE(contains_bottom(o));
    CHECK(o.size() <= limits.max_axioms);
    const auto& sig = o.signature();
    CHECK(sig.concepts.size() <= limits.max_concepts);
    CHECK(sig.roles.size() <= limits.max_roles);
    CHECK(sig.individuals.size() <= limits.max_individuals);
    CHECK(o == random_normalized_ontology(seed));
  }
}

TEST_CASE("every shape occurs") {
  std::map<std::string, int> shapes;
  for (std::uint64_t seed = 0; seed < 300; ++seed)
    for (const auto& ax : random_normalized_ontology(seed).axioms()) {
      std::string s = "RI";
      if (const auto* ci = std::get_if<ConceptInclusion>(&ax)) {
        if (ci->sub.is_conj()) s = "conj";
        else if (ci->sub.is_exists()) s = "exists-lhs";
        else if (ci->sup.is_exists()) s = "exists-rhs";
        else s = "sub";
      } else if (std::holds_alternative<ConceptAssertion>(ax)) {
        s = "concept-assertion";
      } else if (std::holds_alternative<RoleAssertion>(ax)) {
        s = "role-assertion";
      }
      ++shapes[s];
    }
  CHECK(shapes.size() == 7);
}

TEST_CASE("custom limits") {
  const GeneratorLimits tiny{1, 0, 1, 3};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Ontology o = random_normalized_ontology(seed, tiny);
    CHECK(o.signature().concepts.size() <= 1);
    CHECK(o.signature().roles.empty());
    CHECK(o.size() <= 3);
  }
}
