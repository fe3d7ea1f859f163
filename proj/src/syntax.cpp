#include "elhgeo/syntax.hpp"

#include <algorithm>
#include <cctype>

#include "elhgeo/error.hpp"

namespace elhgeo {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidName: return "InvalidName";
    case ErrorKind::BottomNotSupported: return "BottomNotSupported";
    case ErrorKind::TopNotSupported: return "TopNotSupported";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotNormalFormAxiom: return "NotNormalFormAxiom";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Format: return "Format";
  }
  return "Unknown";
}

SyntaxError::SyntaxError(std::size_t line, std::size_t column,
                         std::string expected)
    : std::runtime_error("syntax error at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": expected " + expected),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

bool is_valid_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  // Keywords of the surface syntax.
  if (name == "Top" || name == "Bottom" || name == "And" || name == "Some")
    return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

bool is_fresh_name(std::string_view name) noexcept {
  return name.starts_with(kFreshPrefix);
}

void validate_name(std::string_view name) {
  if (!is_valid_name(name))
    throw Error(ErrorKind::InvalidName,
                "invalid name '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Concept

Concept Concept::top() { return Concept(Kind::Top, {}, {}); }
Concept Concept::bottom() { return Concept(Kind::Bottom, {}, {}); }

Concept Concept::atomic(std::string name) {
  validate_name(name);
  return Concept(Kind::Atomic, std::move(name), {});
}

Concept Concept::conj(Concept left, Concept right) {
  std::vector<Concept> args;
  args.reserve(2);
  args.push_back(std::move(left));
  args.push_back(std::move(right));
  return Concept(Kind::Conj, {}, std::move(args));
}

Concept Concept::exists(std::string role, Concept filler) {
  validate_name(role);
  std::vector<Concept> args;
  args.push_back(std::move(filler));
  return Concept(Kind::Exists, std::move(role), std::move(args));
}

const Concept& Concept::left() const {
  if (kind_ != Kind::Conj)
    throw Error(ErrorKind::InvalidArgument, "left() on a non-conjunction");
  return args_[0];
}

const Concept& Concept::right() const {
  if (kind_ != Kind::Conj)
    throw Error(ErrorKind::InvalidArgument, "right() on a non-conjunction");
  return args_[1];
}

const Concept& Concept::filler() const {
  if (kind_ != Kind::Exists)
    throw Error(ErrorKind::InvalidArgument, "filler() on a non-existential");
  return args_[0];
}

bool Concept::contains_bottom() const noexcept {
  if (kind_ == Kind::Bottom) return true;
  return std::any_of(args_.begin(), args_.end(),
                     [](const Concept& c) { return c.contains_bottom(); });
}

bool Concept::contains_top() const noexcept {
  if (kind_ == Kind::Top) return true;
  return std::any_of(args_.begin(), args_.end(),
                     [](const Concept& c) { return c.contains_top(); });
}

std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.name_ <=> b.name_; c != 0) return c;
  const auto n = std::min(a.args_.size(), b.args_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = a.args_[i] <=> b.args_[i]; c != 0) return c;
  return a.args_.size() <=> b.args_.size();
}

Concept atom(std::string name) { return Concept::atomic(std::move(name)); }
Concept operator&(Concept a, Concept b) {
  return Concept::conj(std::move(a), std::move(b));
}
Concept some(std::string role, Concept filler) {
  return Concept::exists(std::move(role), std::move(filler));
}
Axiom subclass(Concept sub, Concept sup) {
  return ConceptInclusion{std::move(sub), std::move(sup)};
}
Axiom subrole(std::string sub, std::string sup) {
  validate_name(sub);
  validate_name(sup);
  return RoleInclusion{std::move(sub), std::move(sup)};
}
Axiom instance(Concept c, std::string individual) {
  validate_name(individual);
  return ConceptAssertion{std::move(c), std::move(individual)};
}
Axiom related(std::string role, std::string subject, std::string object) {
  validate_name(role);
  validate_name(subject);
  validate_name(object);
  return RoleAssertion{std::move(role), std::move(subject), std::move(object)};
}

// ---------------------------------------------------------------------------
// Signatures

void collect_names(const Concept& c, Signature& sig) {
  switch (c.kind()) {
    case Concept::Kind::Top:
    case Concept::Kind::Bottom:
      return;
    case Concept::Kind::Atomic:
      sig.concepts.insert(c.name());
      return;
    case Concept::Kind::Conj:
      collect_names(c.left(), sig);
      collect_names(c.right(), sig);
      return;
    case Concept::Kind::Exists:
      sig.roles.insert(c.role());
      collect_names(c.filler(), sig);
      return;
  }
}

void collect_names(const Axiom& ax, Signature& sig) {
  std::visit(
      [&sig](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, ConceptInclusion>) {
          collect_names(a.sub, sig);
          collect_names(a.sup, sig);
        } else if constexpr (std::is_same_v<T, RoleInclusion>) {
          sig.roles.insert(a.sub);
          sig.roles.insert(a.sup);
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          collect_names(a.cls, sig);
          sig.individuals.insert(a.individual);
        } else {
          sig.roles.insert(a.role);
          sig.individuals.insert(a.subject);
          sig.individuals.insert(a.object);
        }
      },
      ax);
}

bool within(const Axiom& ax, const Signature& sig) {
  Signature names;
  collect_names(ax, names);
  return std::includes(sig.concepts.begin(), sig.concepts.end(),
                       names.concepts.begin(), names.concepts.end()) &&
         std::includes(sig.roles.begin(), sig.roles.end(), names.roles.begin(),
                       names.roles.end()) &&
         std::includes(sig.individuals.begin(), sig.individuals.end(),
                       names.individuals.begin(), names.individuals.end());
}

// ---------------------------------------------------------------------------
// Ontology

Ontology::Ontology(const std::vector<Axiom>& axioms) {
  for (const auto& ax : axioms) add(ax);
}

void Ontology::add(const Axiom& ax) {
  auto& part = (is_ci(ax) || is_ri(ax)) ? tbox_ : abox_;
  auto it = std::lower_bound(part.begin(), part.end(), ax);
  if (it != part.end() && *it == ax) return;
  part.insert(it, ax);
  collect_names(ax, signature_);
}

std::vector<Axiom> Ontology::axioms() const {
  std::vector<Axiom> all = tbox_;
  all.insert(all.end(), abox_.begin(), abox_.end());
  return all;
}

Ontology Ontology::tbox_only() const { return Ontology(tbox_); }

bool contains_bottom(const Axiom& ax) noexcept {
  if (const auto* ci = std::get_if<ConceptInclusion>(&ax))
    return ci->sub.contains_bottom() || ci->sup.contains_bottom();
  if (const auto* ca = std::get_if<ConceptAssertion>(&ax))
    return ca->cls.contains_bottom();
  return false;
}

bool contains_bottom(const Ontology& o) noexcept {
  const auto pred = [](const Axiom& ax) { return contains_bottom(ax); };
  return std::any_of(o.tbox().begin(), o.tbox().end(), pred) ||
         std::any_of(o.abox().begin(), o.abox().end(), pred);
}

// ---------------------------------------------------------------------------
// Normal forms

namespace {

bool is_name(const Concept& c, bool allow_top) {
  return c.is_atomic() || (allow_top && c.is_top());
}

bool ci_shape(const ConceptInclusion& ci, bool allow_top) {
  const auto& l = ci.sub;
  const auto& r = ci.sup;
  if (is_name(l, allow_top)) {
    if (is_name(r, allow_top)) return true;
    return r.is_exists() && is_name(r.filler(), allow_top);
  }
  if (!is_name(r, allow_top)) return false;
  if (l.is_conj())
    return is_name(l.left(), allow_top) && is_name(l.right(), allow_top);
  if (l.is_exists()) return is_name(l.filler(), allow_top);
  return false;
}

bool concept_shape(const Concept& c, bool allow_top) {
  if (is_name(c, allow_top)) return true;
  if (c.is_conj())
    return is_name(c.left(), allow_top) && is_name(c.right(), allow_top);
  if (c.is_exists()) return is_name(c.filler(), allow_top);
  return false;
}

}  // namespace

bool is_normal_form_ci(const Axiom& ax) noexcept {
  const auto* ci = std::get_if<ConceptInclusion>(&ax);
  return ci != nullptr && ci_shape(*ci, false);
}

bool is_normal_form_concept(const Concept& c) noexcept {
  return concept_shape(c, false);
}

bool is_normal_form_iq(const Axiom& ax) noexcept {
  if (std::holds_alternative<RoleAssertion>(ax)) return true;
  const auto* ca = std::get_if<ConceptAssertion>(&ax);
  return ca != nullptr && concept_shape(ca->cls, false);
}

bool is_query_form(const Axiom& ax) noexcept {
  if (std::holds_alternative<RoleAssertion>(ax) ||
      std::holds_alternative<RoleInclusion>(ax))
    return true;
  if (const auto* ci = std::get_if<ConceptInclusion>(&ax))
    return ci_shape(*ci, true);
  const auto& ca = std::get<ConceptAssertion>(ax);
  return concept_shape(ca.cls, true);
}

bool is_normalized(const Ontology& o) noexcept {
  for (const auto& ax : o.tbox())
    if (!is_ri(ax) && !is_normal_form_ci(ax)) return false;
  for (const auto& ax : o.abox()) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&ax))
      if (!ca->cls.is_atomic()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Rendering

std::string to_string(const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::Top: return "Top";
    case Concept::Kind::Bottom: return "Bottom";
    case Concept::Kind::Atomic: return c.name();
    case Concept::Kind::Conj:
      return "And(" + to_string(c.left()) + " " + to_string(c.right()) + ")";
    case Concept::Kind::Exists:
      return "Some(" + c.role() + " " + to_string(c.filler()) + ")";
  }
  return {};
}

std::string to_string(const Axiom& ax) {
  return std::visit(
      [](const auto& a) -> std::string {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, ConceptInclusion>)
          return "SubClassOf(" + to_string(a.sub) + " " + to_string(a.sup) +
                 ")";
        else if constexpr (std::is_same_v<T, RoleInclusion>)
          return "SubRoleOf(" + a.sub + " " + a.sup + ")";
        else if constexpr (std::is_same_v<T, ConceptAssertion>)
          return "ClassAssertion(" + to_string(a.cls) + " " +
                 a.individual + ")";
        else
          return "RoleAssertion(" + a.role + " " + a.subject + " " + a.object +
                 ")";
      },
      ax);
}

}  // namespace elhgeo
