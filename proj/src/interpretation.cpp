#include "elhgeo/interpretation.hpp"

#include <random>

#include "elhgeo/error.hpp"

namespace elhgeo {

void FiniteInterpretation::check(Element e) const {
  if (e >= domain_size_)
    throw Error(ErrorKind::UnknownElement,
                "element " + std::to_string(e) + " outside domain of size " +
                    std::to_string(domain_size_));
}

void FiniteInterpretation::set_individual(const std::string& name, Element e) {
  validate_name(name);
  check(e);
  individuals_[name] = e;
}

void FiniteInterpretation::declare_concept(const std::string& name) {
  validate_name(name);
  concepts_[name];
}

void FiniteInterpretation::declare_role(const std::string& name) {
  validate_name(name);
  roles_[name];
}

void FiniteInterpretation::add_to_concept(const std::string& name, Element e) {
  validate_name(name);
  check(e);
  concepts_[name].insert(e);
}

void FiniteInterpretation::add_to_role(const std::string& name, Element from,
                                       Element to) {
  validate_name(name);
  check(from);
  check(to);
  roles_[name].emplace(from, to);
}

bool FiniteInterpretation::remove_from_role(const std::string& name,
                                            Element from, Element to) {
  auto it = roles_.find(name);
  return it != roles_.end() && it->second.erase({from, to}) > 0;
}

Element FiniteInterpretation::individual(const std::string& name) const {
  auto it = individuals_.find(name);
  if (it == individuals_.end())
    throw Error(ErrorKind::UnknownName,
                "individual '" + name + "' is not interpreted");
  return it->second;
}

bool FiniteInterpretation::in_concept(const std::string& name,
                                      Element e) const {
  auto it = concepts_.find(name);
  return it != concepts_.end() && it->second.count(e) > 0;
}

bool FiniteInterpretation::in_role(const std::string& name, Element from,
                                   Element to) const {
  auto it = roles_.find(name);
  return it != roles_.end() && it->second.count({from, to}) > 0;
}

const std::set<ElementPair>& FiniteInterpretation::role_pairs(
    const std::string& name) const {
  static const std::set<ElementPair> kEmpty;
  auto it = roles_.find(name);
  return it == roles_.end() ? kEmpty : it->second;
}

Signature FiniteInterpretation::signature() const {
  Signature sig;
  for (const auto& [name, _] : individuals_) sig.individuals.insert(name);
  for (const auto& [name, _] : concepts_) sig.concepts.insert(name);
  for (const auto& [name, _] : roles_) sig.roles.insert(name);
  return sig;
}

ElementSet extension(const FiniteInterpretation& i, const Concept& c) {
  const auto n = i.domain_size();
  switch (c.kind()) {
    case Concept::Kind::Top: {
      ElementSet all(n);
      all.set();
      return all;
    }
    case Concept::Kind::Bottom:
      return ElementSet(n);
    case Concept::Kind::Atomic: {
      ElementSet ext(n);
      if (auto it = i.concepts().find(c.name()); it != i.concepts().end())
        for (Element e : it->second) ext.set(e);
      return ext;
    }
    case Concept::Kind::Conj:
      return extension(i, c.left()) & extension(i, c.right());
    case Concept::Kind::Exists: {
      const ElementSet filler = extension(i, c.filler());
      ElementSet ext(n);
      for (const auto& [d, e] : i.role_pairs(c.role()))
        if (filler.test(e)) ext.set(d);
      return ext;
    }
  }
  return ElementSet(n);
}

bool satisfies(const FiniteInterpretation& i, const Axiom& ax) {
  return std::visit(
      [&i](const auto& a) -> bool {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, ConceptInclusion>) {
          return extension(i, a.sub).is_subset_of(extension(i, a.sup));
        } else if constexpr (std::is_same_v<T, RoleInclusion>) {
          const auto& sup = i.role_pairs(a.sup);
          for (const auto& p : i.role_pairs(a.sub))
            if (!sup.count(p)) return false;
          return true;
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          return extension(i, a.cls).test(i.individual(a.individual));
        } else {
          return i.in_role(a.role, i.individual(a.subject),
                           i.individual(a.object));
        }
      },
      ax);
}

bool satisfies(const FiniteInterpretation& i, const Ontology& o) {
  for (const auto& ax : o.tbox())
    if (!satisfies(i, ax)) return false;
  for (const auto& ax : o.abox())
    if (!satisfies(i, ax)) return false;
  return true;
}

FiniteInterpretation random_interpretation(std::uint64_t seed,
                                           const Signature& sig,
                                           std::size_t max_domain,
                                           double concept_density,
                                           double role_density) {
  const auto named = sig.individuals.size();
  if (max_domain < named || max_domain == 0)
    throw Error(ErrorKind::InvalidArgument,
                "max_domain " + std::to_string(max_domain) +
                    " cannot host " + std::to_string(named) + " individuals");
  std::mt19937_64 rng(seed);
  const std::size_t lo = std::max<std::size_t>(named, 1);
  const std::size_t n =
      std::uniform_int_distribution<std::size_t>(lo, max_domain)(rng);
  std::bernoulli_distribution in_concept(concept_density);
  std::bernoulli_distribution in_role(role_density);

  FiniteInterpretation i(n);
  Element next = 0;
  for (const auto& a : sig.individuals) i.set_individual(a, next++);
  for (const auto& c : sig.concepts) {
    i.declare_concept(c);
    for (Element e = 0; e < n; ++e)
      if (in_concept(rng)) i.add_to_concept(c, e);
  }
  for (const auto& r : sig.roles) {
    i.declare_role(r);
    for (Element d = 0; d < n; ++d)
      for (Element e = 0; e < n; ++e)
        if (in_role(rng)) i.add_to_role(r, d, e);
  }
  return i;
}

nlohmann::ordered_json to_json(const FiniteInterpretation& i) {
  nlohmann::ordered_json j;
  j["domain"] = i.domain_size();
  j["individuals"] = nlohmann::ordered_json::object();
  for (const auto& [name, e] : i.individuals()) j["individuals"][name] = e;
  j["concepts"] = nlohmann::ordered_json::object();
  for (const auto& [name, ext] : i.concepts()) {
    auto& arr = j["concepts"][name] = nlohmann::ordered_json::array();
    for (Element e : ext) arr.push_back(e);
  }
  j["roles"] = nlohmann::ordered_json::object();
  for (const auto& [name, pairs] : i.roles()) {
    auto& arr = j["roles"][name] = nlohmann::ordered_json::array();
    for (const auto& [d, e] : pairs) arr.push_back({d, e});
  }
  return j;
}

FiniteInterpretation interpretation_from_json(const nlohmann::json& j) {
  try {
    FiniteInterpretation i(j.at("domain").get<std::size_t>());
    for (const auto& [name, e] : j.at("individuals").items())
      i.set_individual(name, e.get<Element>());
    for (const auto& [name, ext] : j.at("concepts").items()) {
      i.declare_concept(name);
      for (const auto& e : ext) i.add_to_concept(name, e.get<Element>());
    }
    for (const auto& [name, pairs] : j.at("roles").items()) {
      i.declare_role(name);
      for (const auto& p : pairs) {
        if (!p.is_array() || p.size() != 2)
          throw Error(ErrorKind::Format, "role pair must be [id, id]");
        i.add_to_role(name, p[0].get<Element>(), p[1].get<Element>());
      }
    }
    return i;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Format,
                std::string("malformed interpretation JSON: ") + e.what());
  }
}

}  // namespace elhgeo
