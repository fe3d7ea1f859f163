#include "elhgeo/reasoner.hpp"

#include <algorithm>
#include <map>

#include "elhgeo/error.hpp"

namespace elhgeo {
namespace {

template <class Range>
std::vector<std::string> sorted_names(const Range& names) {
  return {names.begin(), names.end()};
}

std::size_t index_of(const std::vector<std::string>& names,
                     const std::string& name, const char* what) {
  auto it = std::lower_bound(names.begin(), names.end(), name);
  if (it == names.end() || *it != name)
    throw Error(ErrorKind::UnknownName,
                std::string(what) + " '" + name + "' is not in the signature");
  return static_cast<std::size_t>(it - names.begin());
}

}  // namespace

// ---------------------------------------------------------------------------
// Role closure

RoleClosure::RoleClosure(const Ontology& o) {
  const auto& roles = o.signature().roles;
  std::map<std::string, std::set<std::string>> up;
  for (const auto& r : roles) up[r].insert(r);
  for (const auto& ax : o.tbox())
    if (const auto* ri = std::get_if<RoleInclusion>(&ax))
      up[ri->sub].insert(ri->sup);
  // Warshall over the (small) role set.
  for (const auto& k : roles)
    for (const auto& i : roles)
      if (up[i].count(k))
        up[i].insert(up[k].begin(), up[k].end());
  for (const auto& [r, sups] : up)
    for (const auto& s : sups) pairs_.emplace(r, s);
}

bool RoleClosure::subsumed(const std::string& r, const std::string& s) const {
  return r == s || pairs_.count({r, s}) > 0;
}

RoleClosure role_closure(const Ontology& o) { return RoleClosure(o); }

// ---------------------------------------------------------------------------
// Saturation

SaturationState::SaturationState(const Ontology& o, const Signature& extra) {
  if (!is_normalized(o))
    throw Error(ErrorKind::NotNormalized,
                "saturation requires a normalized ontology");
  Signature sig = o.signature();
  sig.concepts.insert(extra.concepts.begin(), extra.concepts.end());
  sig.roles.insert(extra.roles.begin(), extra.roles.end());
  sig.individuals.insert(extra.individuals.begin(), extra.individuals.end());
  individuals_ = sorted_names(sig.individuals);
  concepts_ = sorted_names(sig.concepts);
  roles_ = sorted_names(sig.roles);

  const auto nc = concepts_.size();
  told_.resize(nc);
  conj_.resize(nc);
  exists_rhs_.resize(nc);
  exists_lhs_.resize(nc);
  role_sups_.resize(roles_.size());
  edges_.resize(roles_.size());

  const RoleClosure closure(o);
  for (RoleId r = 0; r < roles_.size(); ++r)
    for (RoleId s = 0; s < roles_.size(); ++s)
      if (closure.subsumed(roles_[r], roles_[s])) role_sups_[r].push_back(s);

  for (const auto& ax : o.tbox()) {
    const auto* ci = std::get_if<ConceptInclusion>(&ax);
    if (!ci) continue;
    const auto& l = ci->sub;
    const auto& r = ci->sup;
    if (l.is_atomic() && r.is_atomic()) {
      told_[concept_id(l.name())].push_back(concept_id(r.name()));
    } else if (l.is_conj()) {
      const auto a1 = concept_id(l.left().name());
      const auto a2 = concept_id(l.right().name());
      const auto b = concept_id(r.name());
      conj_[a1].emplace_back(a2, b);
      conj_[a2].emplace_back(a1, b);
    } else if (l.is_exists()) {
      exists_lhs_[concept_id(l.filler().name())].emplace_back(
          role_id(l.role()), concept_id(r.name()));
    } else {
      exists_rhs_[concept_id(l.name())].emplace_back(
          role_id(r.role()), concept_id(r.filler().name()));
    }
  }

  const std::size_t base = individuals_.size() + 1 + nc;
  subsumers_.assign(base, std::vector<bool>(nc, false));
  preds_.assign(base, {});
  for (ConceptId a = 0; a < nc; ++a)
    add_concept(individuals_.size() + 1 + a, a);
  for (const auto& ax : o.abox()) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&ax)) {
      add_concept(individual_node(ca->individual),
                  concept_id(ca->cls.name()));
    } else {
      const auto& ra = std::get<RoleAssertion>(ax);
      add_edge(individual_node(ra.subject), role_id(ra.role),
               individual_node(ra.object));
    }
  }
  run();
}

std::size_t SaturationState::concept_id(const std::string& name) const {
  return index_of(concepts_, name, "concept");
}

std::size_t SaturationState::role_id(const std::string& name) const {
  return index_of(roles_, name, "role");
}

SaturationState::Node SaturationState::individual_node(
    const std::string& a) const {
  return index_of(individuals_, a, "individual");
}

SaturationState::Node SaturationState::concept_node(
    const std::string& name) const {
  return individuals_.size() + 1 + concept_id(name);
}

SaturationState::Node SaturationState::atom_node(const Concept& atom) const {
  if (atom.is_top()) return top_node();
  if (!atom.is_atomic())
    throw Error(ErrorKind::InvalidArgument,
                "not an atom: " + to_string(atom));
  return concept_node(atom.name());
}

bool SaturationState::has(Node x, const std::string& name) const {
  return subsumers_.at(x)[concept_id(name)];
}

bool SaturationState::has(Node x, const Concept& atom) const {
  if (atom.is_top()) return true;
  return has(x, atom.name());
}

bool SaturationState::edge(const std::string& role, Node x, Node y) const {
  return edges_[role_id(role)].count({x, y}) > 0;
}

const std::set<std::pair<SaturationState::Node, SaturationState::Node>>&
SaturationState::edges(const std::string& role) const {
  return edges_[role_id(role)];
}

SaturationState::Node SaturationState::new_node() {
  subsumers_.emplace_back(concepts_.size(), false);
  preds_.emplace_back();
  return subsumers_.size() - 1;
}

SaturationState::Node SaturationState::add_test_node(
    const std::vector<Concept>& subsumees) {
  const Node x = new_node();
  for (const auto& c : subsumees) {
    if (c.is_atomic()) {
      add_concept(x, concept_id(c.name()));
    } else if (c.is_exists() && c.filler().is_atom()) {
      add_edge(x, role_id(c.role()), atom_node(c.filler()));
    } else if (!c.is_top()) {
      throw Error(ErrorKind::InvalidArgument,
                  "test node subsumee must be an atom or Some(r atom): " +
                      to_string(c));
    }
  }
  run();
  return x;
}

void SaturationState::add_concept(Node x, ConceptId a) {
  if (subsumers_[x][a]) return;
  subsumers_[x][a] = true;
  ++firings_;
  queue_.push_back(Event{false, x, a, 0, 0});
}

void SaturationState::add_edge(Node x, RoleId r, Node y) {
  for (RoleId s : role_sups_[r]) {
    if (!edges_[s].emplace(x, y).second) continue;
    ++firings_;
    preds_[y].emplace_back(x, s);
    queue_.push_back(Event{true, x, 0, s, y});
  }
}

void SaturationState::run() {
  while (!queue_.empty()) {
    const Event ev = queue_.front();
    queue_.pop_front();
    if (!ev.is_edge) {
      const Node x = ev.x;
      const ConceptId a = ev.atom;
      for (ConceptId b : told_[a]) add_concept(x, b);
      for (const auto& [a2, b] : conj_[a])
        if (subsumers_[x][a2]) add_concept(x, b);
      for (const auto& [r, b] : exists_rhs_[a])
        add_edge(x, r, individuals_.size() + 1 + b);
      // x just gained A: every predecessor w with (w, x) ∈ R(s) and
      // ∃s.A ⊑ B gains B. R(s) is closed under the role hierarchy already.
      for (const auto& [s, b] : exists_lhs_[a]) {
        for (std::size_t k = 0; k < preds_[x].size(); ++k) {
          const auto [w, role] = preds_[x][k];
          if (role == s) add_concept(w, b);
        }
      }
    } else {
      const Node x = ev.x;
      const Node y = ev.y;
      for (ConceptId a = 0; a < concepts_.size(); ++a) {
        if (!subsumers_[y][a]) continue;
        for (const auto& [s, b] : exists_lhs_[a])
          if (s == ev.role) add_concept(x, b);
      }
    }
  }
}

SaturationState saturate(const Ontology& o) { return SaturationState(o); }

// ---------------------------------------------------------------------------
// Entailment

Reasoner::Reasoner(const Ontology& o)
    : ontology_(o), state_(o), closure_(o) {}

bool Reasoner::entails(const Axiom& ax) const {
  if (!is_query_form(ax))
    throw Error(ErrorKind::NotNormalFormAxiom,
                "not a normal-form axiom: " + to_string(ax));
  if (within(ax, ontology_.signature()))
    return decide(state_, closure_, ax);
  Signature extra;
  collect_names(ax, extra);
  const SaturationState widened(ontology_, extra);
  return decide(widened, closure_, ax);
}

bool Reasoner::decide(const SaturationState& state, const RoleClosure& roles,
                      const Axiom& ax) {
  using Node = SaturationState::Node;
  const auto has_successor = [&state](Node x, const std::string& r,
                                      const Concept& filler) {
    for (const auto& [from, to] : state.edges(r))
      if (from == x && state.has(to, filler)) return true;
    return false;
  };

  if (const auto* ri = std::get_if<RoleInclusion>(&ax))
    return roles.subsumed(ri->sub, ri->sup);

  if (const auto* ra = std::get_if<RoleAssertion>(&ax))
    return state.edge(ra->role, state.individual_node(ra->subject),
                      state.individual_node(ra->object));

  if (const auto* ca = std::get_if<ConceptAssertion>(&ax)) {
    const Node a = state.individual_node(ca->individual);
    const auto& c = ca->cls;
    if (c.is_atom()) return state.has(a, c);
    if (c.is_conj()) return state.has(a, c.left()) && state.has(a, c.right());
    return has_successor(a, c.role(), c.filler());
  }

  const auto& ci = std::get<ConceptInclusion>(ax);
  const auto& lhs = ci.sub;
  const auto& rhs = ci.sup;
  if (lhs.is_atom()) {
    const Node x = state.atom_node(lhs);
    if (rhs.is_atom()) return state.has(x, rhs);
    return has_successor(x, rhs.role(), rhs.filler());
  }
  // Conjunctive or existential left-hand side: saturate a copy with a fresh
  // node X standing for it.
  SaturationState scratch = state;
  const Node x = lhs.is_conj()
                     ? scratch.add_test_node({lhs.left(), lhs.right()})
                     : scratch.add_test_node({lhs});
  return scratch.has(x, rhs);
}

bool entails(const Ontology& o, const Axiom& ax) {
  return Reasoner(o).entails(ax);
}

}  // namespace elhgeo
