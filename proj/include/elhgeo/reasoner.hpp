#pragma once

// Entailment for normalized ELH by completion: TBox saturation over one node
// per concept name (plus ⊤) and ABox materialization over one node per
// individual.

#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "elhgeo/syntax.hpp"

namespace elhgeo {

/// Reflexive-transitive closure of the declared role inclusions, over the
/// roles of the ontology.
class RoleClosure {
 public:
  explicit RoleClosure(const Ontology& o);

  /// r ⊑* s. Unknown roles are only related to themselves.
  bool subsumed(const std::string& r, const std::string& s) const;

  /// All pairs (r, s) with r ⊑* s.
  const std::set<std::pair<std::string, std::string>>& pairs() const noexcept {
    return pairs_;
  }

 private:
  std::set<std::pair<std::string, std::string>> pairs_;
};

RoleClosure role_closure(const Ontology& o);

/// The completion graph. Node ids: individuals first (name order), then the ⊤
/// node, then one node per concept name (name order), then test nodes.
/// S(x) is stored as a bitset over concept-name ids; ⊤ ∈ S(x) implicitly.
class SaturationState {
 public:
  using Node = std::size_t;
  using ConceptId = std::size_t;
  using RoleId = std::size_t;

  /// Throws Error(NotNormalized) unless is_normalized(o). Names in `extra`
  /// get nodes even when they do not occur in `o`.
  explicit SaturationState(const Ontology& o, const Signature& extra = {});

  std::size_t node_count() const noexcept { return subsumers_.size(); }
  std::size_t individual_count() const noexcept { return individuals_.size(); }

  Node individual_node(const std::string& a) const;
  Node top_node() const noexcept { return individuals_.size(); }
  Node concept_node(const std::string& name) const;
  /// Node standing for an atom (a concept name or ⊤).
  Node atom_node(const Concept& atom) const;

  /// A ∈ S(x); ⊤ ∈ S(x) for every node.
  bool has(Node x, const std::string& name) const;
  bool has(Node x, const Concept& atom) const;
  /// (x, y) ∈ R(r).
  bool edge(const std::string& role, Node x, Node y) const;
  const std::set<std::pair<Node, Node>>& edges(const std::string& role) const;

  /// Adds a node X with X ⊑ A for each atom and X ⊑ ∃r.B for each
  /// existential, then saturates. Returns X.
  Node add_test_node(const std::vector<Concept>& subsumees);

  /// Number of rule applications that changed the state.
  std::size_t firings() const noexcept { return firings_; }

  const std::vector<std::string>& concept_names() const noexcept {
    return concepts_;
  }
  const std::vector<std::string>& role_names() const noexcept {
    return roles_;
  }
  const std::vector<std::string>& individual_names() const noexcept {
    return individuals_;
  }

 private:
  struct Event {
    bool is_edge;
    Node x;
    ConceptId atom;  // concept event
    RoleId role;        // edge event
    Node y;
  };

  std::size_t concept_id(const std::string& name) const;
  std::size_t role_id(const std::string& name) const;
  Node new_node();
  void add_concept(Node x, ConceptId a);
  void add_edge(Node x, RoleId r, Node y);
  void run();

  std::vector<std::string> individuals_;
  std::vector<std::string> concepts_;
  std::vector<std::string> roles_;

  // Indexed TBox.
  std::vector<std::vector<ConceptId>> told_;                          // A ⊑ B
  std::vector<std::vector<std::pair<ConceptId, ConceptId>>> conj_;    // A⊓A2 ⊑ B
  std::vector<std::vector<std::pair<RoleId, ConceptId>>> exists_rhs_; // A ⊑ ∃r.B
  std::vector<std::vector<std::pair<RoleId, ConceptId>>> exists_lhs_; // ∃r.A ⊑ B
  std::vector<std::vector<RoleId>> role_sups_;          // r ⊑* s

  std::vector<std::vector<bool>> subsumers_;
  std::vector<std::set<std::pair<Node, Node>>> edges_;
  std::vector<std::vector<std::pair<Node, RoleId>>> preds_;
  std::deque<Event> queue_;
  std::size_t firings_ = 0;
};

/// The saturation of an ontology plus the entailment tests built on it.
/// Entailment of CIs only consults the concept nodes, which never depend on
/// the ABox, so T ⊨ α and O ⊨ α coincide for TBox axioms.
class Reasoner {
 public:
  /// Throws Error(NotNormalized) unless is_normalized(o).
  explicit Reasoner(const Ontology& o);

  const Ontology& ontology() const noexcept { return ontology_; }
  const SaturationState& state() const noexcept { return state_; }
  const RoleClosure& roles() const noexcept { return closure_; }

  /// O ⊨ α for α in query form (normal form, atoms may be ⊤). Throws
  /// Error(NotNormalFormAxiom) otherwise. Names outside sig(O) are fine.
  bool entails(const Axiom& ax) const;

 private:
  static bool decide(const SaturationState& state, const RoleClosure& roles,
                     const Axiom& ax);

  Ontology ontology_;
  SaturationState state_;
  RoleClosure closure_;
};

SaturationState saturate(const Ontology& o);

/// One-shot convenience; prefer a Reasoner for repeated queries.
bool entails(const Ontology& o, const Axiom& ax);

}  // namespace elhgeo
