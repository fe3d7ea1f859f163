#include <doctest.h>

#include "elhgeo/canonical.hpp"
#include "elhgeo/error.hpp"
#include "elhgeo/generators.hpp"
#include "elhgeo/reasoner.hpp"
#include "fixtures.hpp"

using namespace elhgeo;
using testing::o_ex;

TEST_CASE("domain of the running example") {
  const CanonicalModel m = build_canonical(o_ex());
  CHECK(m.elements.size() == 12);
  CHECK(canonical_domain_size(o_ex().signature()) == 12);
  CHECK(m.interpretation.domain_size() == 12);
  std::vector<std::string> labels;
  for (const auto& e : m.elements) labels.push_back(label(e));
  CHECK(labels == std::vector<std::string>{
                      "a", "b", "c_Top", "c_A", "c_B", "c_And(A A)",
                      "c_And(A B)", "c_And(B A)", "c_And(B B)", "c_Some(r A)",
                      "c_Some(r B)", "c_Some(r Top)"});
}

TEST_CASE("extensions of the running example") {
  const CanonicalModel m = build_canonical(o_ex());
  const auto id = [&m](const CanonicalElement& e) { return m.id_of(e); };
  const auto& i = m.interpretation;
  const std::set<Element> a_ext = {id(NamedElement{"a"}), id(AtomElement{"A"}),
                                   id(ConjElement{"A", "A"}),
                                   id(ConjElement{"A", "B"}),
                                   id(ConjElement{"B", "A"})};
  CHECK(i.concepts().at("A") == a_ext);
  CHECK_FALSE(i.in_concept("A", id(NamedElement{"b"})));
  CHECK(i.in_concept("B", id(NamedElement{"b"})));
  CHECK(i.in_concept("B", id(ConjElement{"B", "B"})));
  CHECK_FALSE(i.in_concept("B", id(TopElement{})));

  const std::set<ElementPair> r = {
      {id(NamedElement{"a"}), id(NamedElement{"b"})},
      {id(NamedElement{"a"}), id(TopElement{})},
      {id(NamedElement{"a"}), id(AtomElement{"B"})},
      {id(ExistsElement{"r", ""}), id(TopElement{})},
      {id(ExistsElement{"r", "A"}), id(AtomElement{"A"})},
      {id(ExistsElement{"r", "B"}), id(AtomElement{"B"})}};
  CHECK(i.roles().at("r") == r);
  CHECK(i.individual("a") == 0);
  CHECK(i.individual("b") == 1);
}

TEST_CASE("element concepts") {
  CHECK(element_concept(TopElement{}) == Concept::top());
  CHECK(element_concept(ConjElement{"A", "B"}) == (atom("A") & atom("B")));
  CHECK(element_concept(ExistsElement{"r", ""}) == some("r", Concept::top()));
  CHECK_THROWS(element_concept(NamedElement{"a"}));
  CHECK_THROWS(build_canonical(o_ex()).id_of(NamedElement{"zz"}));
}

TEST_CASE("the running example's canonical model is faithful") {
  const CanonicalModel m = build_canonical(o_ex());
  CHECK(verify_canonical(o_ex(), m.interpretation).empty());
  CHECK(satisfies(m.interpretation, o_ex()));
}

TEST_CASE("a dropped edge is detected") {
  CanonicalModel m = build_canonical(o_ex());
  m.interpretation.remove_from_role("r", 0, 1);
  const auto mismatches = verify_canonical(o_ex(), m.interpretation);
  REQUIRE_FALSE(mismatches.empty());
  bool found = false;
  for (const auto& x : mismatches)
    if (x.axiom == related("r", "a", "b")) {
      found = true;
      CHECK_FALSE(x.satisfied);
      CHECK(x.entailed);
    }
  CHECK(found);
}

TEST_CASE("empty ABox") {
  const Ontology o({subclass(atom("A"), some("r", atom("B"))),
                    subclass(some("r", atom("B")), atom("C")),
                    subrole("r", "s")});
  const CanonicalModel m = build_canonical(o);
  CHECK(m.elements.size() == canonical_domain_size(o.signature()));
  CHECK(m.elements.size() == 0 + 4 + 9 + 2 * 4);
  CHECK(verify_canonical(o, m.interpretation).empty());
}

TEST_CASE("input validation") {
  const Ontology nested({subclass(atom("A"), some("r", some("s", atom("B"))))});
  CHECK_THROWS_AS(build_canonical(nested), Error);
  const Ontology bottom({subclass(atom("A"), Concept::bottom())});
  try {
    build_canonical(bottom);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BottomNotSupported);
  }
}

TEST_CASE("random ontologies") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Ontology o = random_normalized_ontology(seed);
    const Reasoner r(o);
    const CanonicalModel m = build_canonical(r);
    CAPTURE(seed);
    CHECK(m.elements.size() == canonical_domain_size(o.signature()));
    CHECK(satisfies(m.interpretation, o));
    CHECK(verify_canonical(r, m.interpretation).empty());
    CHECK(build_canonical(o).interpretation == m.interpretation);
  }
}
