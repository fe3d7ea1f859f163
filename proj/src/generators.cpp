#include "elhgeo/generators.hpp"

#include <random>
#include <string>
#include <vector>

namespace elhgeo {
namespace {

std::vector<std::string> names(char first, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) {
    std::string name(1, static_cast<char>(first + k % 26));
    if (k >= 26) name += std::to_string(k / 26);
    out.push_back(std::move(name));
  }
  return out;
}

}  // namespace

Ontology random_normalized_ontology(std::uint64_t seed,
                                    const GeneratorLimits& limits) {
  std::mt19937_64 rng(seed);
  const auto draw = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const auto concepts = names('A', draw(1, std::max<std::size_t>(1, limits.max_concepts)));
  const auto roles = names('r', draw(0, limits.max_roles));
  const auto inds = names('a', draw(0, limits.max_individuals));
  const std::size_t n_axioms = draw(0, limits.max_axioms);

  const auto pick = [&](const std::vector<std::string>& from) {
    return from[draw(0, from.size() - 1)];
  };
  const auto a = [&] { return Concept::atomic(pick(concepts)); };

  enum Shape { Sub, Conj, ExistsLhs, ExistsRhs, Ri, ConceptAssert, RoleAssert };
  std::vector<Shape> shapes{Sub, Conj};
  if (!roles.empty()) {
    shapes.insert(shapes.end(), {ExistsLhs, ExistsRhs, Ri});
  }
  if (!inds.empty()) shapes.push_back(ConceptAssert);
  if (!inds.empty() && !roles.empty()) shapes.push_back(RoleAssert);

  Ontology o;
  for (std::size_t k = 0; k < n_axioms; ++k) {
    switch (shapes[draw(0, shapes.size() - 1)]) {
      case Sub:
        o.add(ConceptInclusion{a(), a()});
        break;
      case Conj: {
        Concept l = a();
        Concept r = a();
        o.add(ConceptInclusion{Concept::conj(l, r), a()});
        break;
      }
      case ExistsLhs: {
        std::string r = pick(roles);
        Concept f = a();
        o.add(ConceptInclusion{Concept::exists(r, f), a()});
        break;
      }
      case ExistsRhs: {
        Concept l = a();
        std::string r = pick(roles);
        o.add(ConceptInclusion{l, Concept::exists(r, a())});
        break;
      }
      case Ri: {
        std::string r = pick(roles);
        o.add(RoleInclusion{r, pick(roles)});
        break;
      }
      case ConceptAssert: {
        Concept c = a();
        o.add(ConceptAssertion{c, pick(inds)});
        break;
      }
      case RoleAssert: {
        std::string r = pick(roles);
        std::string x = pick(inds);
        o.add(RoleAssertion{r, x, pick(inds)});
        break;
      }
    }
  }
  return o;
}

}  // namespace elhgeo
