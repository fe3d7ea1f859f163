#pragma once

// Finite classical interpretations, the model-theoretic reference semantics.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>

#include <boost/dynamic_bitset.hpp>
#include <nlohmann/json.hpp>

#include "elhgeo/syntax.hpp"

namespace elhgeo {

/// Domain elements are dense ids 0..n-1.
using Element = std::size_t;
using ElementSet = boost::dynamic_bitset<>;
using ElementPair = std::pair<Element, Element>;

/// Δ = {0..n-1} with extensions for concept and role names and a total map for
/// individual names. Concept and role names absent from the maps are read as
/// empty; the keys that are present (possibly with empty extensions) form the
/// interpretation's signature.
class FiniteInterpretation {
 public:
  FiniteInterpretation() = default;
  explicit FiniteInterpretation(std::size_t domain_size)
      : domain_size_(domain_size) {}

  std::size_t domain_size() const noexcept { return domain_size_; }

  void set_individual(const std::string& name, Element e);
  void declare_concept(const std::string& name);
  void declare_role(const std::string& name);
  void add_to_concept(const std::string& name, Element e);
  void add_to_role(const std::string& name, Element from, Element to);
  bool remove_from_role(const std::string& name, Element from, Element to);

  const std::map<std::string, Element>& individuals() const noexcept {
    return individuals_;
  }
  const std::map<std::string, std::set<Element>>& concepts() const noexcept {
    return concepts_;
  }
  const std::map<std::string, std::set<ElementPair>>& roles() const noexcept {
    return roles_;
  }

  /// a^I; throws Error(UnknownName) for individuals outside the map.
  Element individual(const std::string& name) const;
  bool in_concept(const std::string& name, Element e) const;
  bool in_role(const std::string& name, Element from, Element to) const;
  const std::set<ElementPair>& role_pairs(const std::string& name) const;

  /// Names with an entry in the maps.
  Signature signature() const;

  bool operator==(const FiniteInterpretation&) const = default;

 private:
  void check(Element e) const;

  std::size_t domain_size_ = 0;
  std::map<std::string, Element> individuals_;
  std::map<std::string, std::set<Element>> concepts_;
  std::map<std::string, std::set<ElementPair>> roles_;
};

/// C^I. ⊤ is the whole domain, ⊥ is empty.
ElementSet extension(const FiniteInterpretation& i, const Concept& c);

/// I ⊨ α for any ELH axiom.
bool satisfies(const FiniteInterpretation& i, const Axiom& ax);
bool satisfies(const FiniteInterpretation& i, const Ontology& o);

/// Reproducible pseudo-random interpretation over `sig` with a domain of at
/// most `max_domain` elements; individuals are mapped injectively, in name
/// order, onto 0..|N_I|-1. Throws Error(InvalidArgument) if max_domain < |N_I|.
FiniteInterpretation random_interpretation(std::uint64_t seed,
                                           const Signature& sig,
                                           std::size_t max_domain,
                                           double concept_density = 0.5,
                                           double role_density = 0.3);

/// {"domain": n, "individuals": {name: id}, "concepts": {name: [ids]},
///  "roles": {name: [[id, id]]}}
nlohmann::ordered_json to_json(const FiniteInterpretation& i);
FiniteInterpretation interpretation_from_json(const nlohmann::json& j);

}  // namespace elhgeo
