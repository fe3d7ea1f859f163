#include <doctest.h>

#include <set>

#include "elhgeo/universe.hpp"
#include "fixtures.hpp"

using namespace elhgeo;

TEST_CASE("universe of the running example") {
  const AxiomUniverse u(testing::o_ex().signature());
  CHECK(u.size() == 41);
  CHECK(u.family_size(AxiomFamily::ConceptIQ) == 4);
  CHECK(u.family_size(AxiomFamily::ConjIQ) == 8);
  CHECK(u.family_size(AxiomFamily::ExistsIQ) == 4);
  CHECK(u.family_size(AxiomFamily::RoleIQ) == 4);
  CHECK(u.family_size(AxiomFamily::SubsumptionCI) == 4);
  CHECK(u.family_size(AxiomFamily::ConjCI) == 8);
  CHECK(u.family_size(AxiomFamily::ExistsLhsCI) == 4);
  CHECK(u.family_size(AxiomFamily::ExistsRhsCI) == 4);
  CHECK(u.family_size(AxiomFamily::RoleRI) == 1);
}

TEST_CASE("small universes") {
  CHECK(AxiomUniverse(Signature{}).size() == 0);
  CHECK(AxiomUniverse(Signature{}).begin() == AxiomUniverse(Signature{}).end());
  const AxiomUniverse u(Signature{{"A"}, {}, {"a"}});
  const std::vector<Axiom> all(u.begin(), u.end());
  CHECK(all == std::vector<Axiom>{instance(atom("A"), "a"),
                                  instance(atom("A") & atom("A"), "a"),
                                  subclass(atom("A"), atom("A")),
                                  subclass(atom("A") & atom("A"), atom("A"))});
}

TEST_CASE("enumeration order is fixed") {
  const AxiomUniverse u(testing::o_ex().signature());
  CHECK(u[0] == instance(atom("A"), "a"));
  CHECK(u[1] == instance(atom("A"), "b"));
  CHECK(u[16] == related("r", "a", "a"));
  CHECK(u[40] == subrole("r", "r"));
  CHECK(u.family_of(0) == AxiomFamily::ConceptIQ);
  CHECK(u.family_of(40) == AxiomFamily::RoleRI);
  CHECK_THROWS(u[41]);
}

TEST_CASE("family counts, completeness and duplicate freedom") {
  for (std::size_t c = 0; c <= 3; ++c)
    for (std::size_t r = 0; r <= 2; ++r)
      for (std::size_t i = 0; i <= 2; ++i)
        for (bool top : {false, true}) {
          Signature sig;
          for (std::size_t k = 0; k < c; ++k) sig.concepts.insert(std::string(1, char('A' + k)));
          for (std::size_t k = 0; k < r; ++k) sig.roles.insert(std::string(1, char('r' + k)));
          for (std::size_t k = 0; k < i; ++k) sig.individuals.insert(std::string(1, char('a' + k)));
          const AxiomUniverse u(sig, top);
          const std::size_t a = c + (top ? 1 : 0);
          CHECK(u.family_size(AxiomFamily::ConceptIQ) == a * i);
          CHECK(u.family_size(AxiomFamily::ConjIQ) == a * a * i);
          CHECK(u.family_size(AxiomFamily::ExistsIQ) == r * a * i);
          CHECK(u.family_size(AxiomFamily::RoleIQ) == r * i * i);
          CHECK(u.family_size(AxiomFamily::SubsumptionCI) == a * a);
          CHECK(u.family_size(AxiomFamily::ConjCI) == a * a * a);
          CHECK(u.family_size(AxiomFamily::ExistsLhsCI) == r * a * a);
          CHECK(u.family_size(AxiomFamily::ExistsRhsCI) == r * a * a);
          CHECK(u.family_size(AxiomFamily::RoleRI) == r * r);

          std::set<Axiom> seen;
          std::size_t k = 0;
          for (const Axiom& ax : u) {
            CHECK(is_query_form(ax));
            CHECK(within(ax, sig));
            if (!top) CHECK(!(is_ci(ax) && !is_normal_form_ci(ax)));
            if (!top && is_iq(ax)) CHECK(is_normal_form_iq(ax));
            CHECK(class_of(u.family_of(k)) ==
                  (is_iq(ax) ? AxiomClass::IQ : is_ci(ax) ? AxiomClass::CI : AxiomClass::RI));
            seen.insert(ax);
            ++k;
          }
          CHECK(seen.size() == u.size());
        }
}
