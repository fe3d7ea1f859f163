#include <doctest.h>

#include "elhgeo/error.hpp"
#include "elhgeo/interpretation.hpp"
#include "fixtures.hpp"

using namespace elhgeo;
using testing::i_ex;
using testing::kD;
using testing::kE;

namespace {

ElementSet set_of(std::size_t n, std::initializer_list<Element> es) {
  ElementSet s(n);
  for (auto e : es) s.set(e);
  return s;
}

/// ∃r.C by scanning every pair of the domain.
ElementSet exists_by_pairs(const FiniteInterpretation& i, const std::string& r,
                           const Concept& c) {
  const ElementSet inner = extension(i, c);
  ElementSet out(i.domain_size());
  for (Element d = 0; d < i.domain_size(); ++d)
    for (Element e = 0; e < i.domain_size(); ++e)
      if (i.in_role(r, d, e) && inner.test(e)) out.set(d);
  return out;
}

Signature small_signature() {
  return Signature{{"A", "B", "C"}, {"r", "s"}, {"a", "b"}};
}

}  // namespace

TEST_CASE("extensions in the running example") {
  const auto i = i_ex();
  CHECK(extension(i, atom("A") & atom("B")) == set_of(2, {kD}));
  CHECK(extension(i, Concept::top()) == set_of(2, {kD, kE}));
  CHECK(extension(i, some("r", atom("B"))) == set_of(2, {kD}));
  CHECK(extension(i, Concept::bottom()).none());
  CHECK(extension(i, atom("Unknown")).none());
}

TEST_CASE("satisfaction in the running example") {
  const auto i = i_ex();
  CHECK(satisfies(i, subclass(atom("A"), atom("B"))));
  CHECK_FALSE(satisfies(i, subclass(atom("B"), atom("A"))));
  CHECK(satisfies(i, related("r", "a", "b")));
  CHECK_FALSE(satisfies(i, related("r", "b", "a")));
  CHECK(satisfies(i, instance(some("r", atom("B")), "a")));
  CHECK(satisfies(i, subrole("r", "r")));
  CHECK_FALSE(satisfies(i, subrole("r", "s")));
  CHECK(satisfies(i, testing::o_ex()));
}

TEST_CASE("individuals must be mapped") {
  const auto i = i_ex();
  CHECK(i.individual("a") == kD);
  CHECK_THROWS_AS(i.individual("z"), Error);
  FiniteInterpretation j(2);
  CHECK_THROWS_AS(j.set_individual("a", 2), Error);
  CHECK_THROWS_AS(j.add_to_role("r", 0, 5), Error);
}

TEST_CASE("random interpretations") {
  const Signature sig = testing::o_ex().signature();
  const auto i = random_interpretation(0, sig, 2);
  CHECK(i.domain_size() == 2);
  CHECK(i.individual("a") == 0);
  CHECK(i.individual("b") == 1);
  CHECK(random_interpretation(0, sig, 2) == i);
  CHECK_THROWS_AS(random_interpretation(0, sig, 1), Error);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto j = random_interpretation(seed, sig, 6);
    CHECK(j.domain_size() >= 2);
    CHECK(j.domain_size() <= 6);
    CHECK(j.signature() == sig);
  }
}

TEST_CASE("extension properties on random interpretations") {
  const Signature sig = small_signature();
  const std::vector<Concept> concepts = {
      atom("A"), atom("B"), atom("C"), Concept::top(),
      atom("A") & atom("B"), some("r", atom("C")), some("s", Concept::top()),
      some("r", atom("A") & some("s", atom("B")))};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto i = random_interpretation(seed, sig, 7);
    for (const auto& c : concepts) {
      for (const auto& d : concepts) {
        const ElementSet cd = extension(i, c & d);
        CHECK(cd.is_subset_of(extension(i, c)));
        CHECK(cd.is_subset_of(extension(i, d)));
        CHECK(satisfies(i, subclass(c, d)) ==
              extension(i, c).is_subset_of(extension(i, d)));
      }
      CHECK(extension(i, some("r", c)) == exists_by_pairs(i, "r", c));
      CHECK(extension(i, some("s", c)) == exists_by_pairs(i, "s", c));
    }
  }
}

TEST_CASE("JSON round trip") {
  const auto i = i_ex();
  const auto j = to_json(i);
  CHECK(j.dump() ==
        R"({"domain":2,"individuals":{"a":0,"b":1},"concepts":{"A":[0],"B":[0,1]},"roles":{"r":[[0,1]]}})");
  CHECK(interpretation_from_json(j) == i);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = random_interpretation(seed, small_signature(), 5);
    CHECK(interpretation_from_json(nlohmann::json::parse(to_json(r).dump())) == r);
  }
  CHECK_THROWS_AS(interpretation_from_json(nlohmann::json::parse(
                      R"({"domain":1,"individuals":{},"concepts":{"A":[3]},"roles":{}})")),
                  Error);
  CHECK_THROWS_AS(interpretation_from_json(nlohmann::json::parse("[]")), Error);
}
