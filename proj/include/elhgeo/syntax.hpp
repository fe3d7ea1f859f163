#pragma once

// Abstract syntax of ELH: concepts, axioms, ontologies and their signatures.

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace elhgeo {

/// Prefix reserved for names introduced by normalization.
inline constexpr std::string_view kFreshPrefix = "N_";

/// Names are non-empty strings over [A-Za-z0-9_], excluding the keywords
/// Top, Bottom, And and Some.
bool is_valid_name(std::string_view name) noexcept;
bool is_fresh_name(std::string_view name) noexcept;

/// Throws Error(InvalidName) unless `name` is valid.
void validate_name(std::string_view name);

class Concept {
 public:
  enum class Kind : std::uint8_t { Top, Bottom, Atomic, Conj, Exists };

  static Concept top();
  static Concept bottom();
  static Concept atomic(std::string name);
  static Concept conj(Concept left, Concept right);
  static Concept exists(std::string role, Concept filler);

  Kind kind() const noexcept { return kind_; }
  bool is_top() const noexcept { return kind_ == Kind::Top; }
  bool is_atomic() const noexcept { return kind_ == Kind::Atomic; }
  bool is_conj() const noexcept { return kind_ == Kind::Conj; }
  bool is_exists() const noexcept { return kind_ == Kind::Exists; }

  /// Concept name for Atomic, role name for Exists; empty otherwise.
  const std::string& name() const noexcept { return name_; }
  const std::string& role() const noexcept { return name_; }

  const Concept& left() const;
  const Concept& right() const;
  const Concept& filler() const;

  /// An atom is a concept name or Top.
  bool is_atom() const noexcept { return is_atomic() || is_top(); }

  bool contains_bottom() const noexcept;
  bool contains_top() const noexcept;

  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b);
  friend bool operator==(const Concept& a, const Concept& b) {
    return (a <=> b) == 0;
  }

 private:
  Concept(Kind kind, std::string name, std::vector<Concept> args)
      : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}

  Kind kind_ = Kind::Top;
  std::string name_;
  std::vector<Concept> args_;
};

struct ConceptInclusion {
  Concept sub;
  Concept sup;
  auto operator<=>(const ConceptInclusion&) const = default;
  bool operator==(const ConceptInclusion&) const = default;
};

struct RoleInclusion {
  std::string sub;
  std::string sup;
  auto operator<=>(const RoleInclusion&) const = default;
  bool operator==(const RoleInclusion&) const = default;
};

struct ConceptAssertion {
  Concept cls;
  std::string individual;
  auto operator<=>(const ConceptAssertion&) const = default;
  bool operator==(const ConceptAssertion&) const = default;
};

struct RoleAssertion {
  std::string role;
  std::string subject;
  std::string object;
  auto operator<=>(const RoleAssertion&) const = default;
  bool operator==(const RoleAssertion&) const = default;
};

using Axiom = std::variant<ConceptInclusion, RoleInclusion, ConceptAssertion,
                           RoleAssertion>;

inline bool is_ci(const Axiom& ax) noexcept {
  return std::holds_alternative<ConceptInclusion>(ax);
}
inline bool is_ri(const Axiom& ax) noexcept {
  return std::holds_alternative<RoleInclusion>(ax);
}
/// Instance queries: concept assertions (any concept) and role assertions.
inline bool is_iq(const Axiom& ax) noexcept {
  return std::holds_alternative<ConceptAssertion>(ax) ||
         std::holds_alternative<RoleAssertion>(ax);
}

// Convenience constructors, mostly for tests and fixtures.
Concept atom(std::string name);
Concept operator&(Concept a, Concept b);
Concept some(std::string role, Concept filler);
Axiom subclass(Concept sub, Concept sup);
Axiom subrole(std::string sub, std::string sup);
Axiom instance(Concept c, std::string individual);
Axiom related(std::string role, std::string subject, std::string object);

struct Signature {
  std::set<std::string> concepts;
  std::set<std::string> roles;
  std::set<std::string> individuals;

  bool empty() const noexcept {
    return concepts.empty() && roles.empty() && individuals.empty();
  }
  bool operator==(const Signature&) const = default;
};

/// Adds every name occurring in `c` / `ax` to `sig`.
void collect_names(const Concept& c, Signature& sig);
void collect_names(const Axiom& ax, Signature& sig);

/// True iff all names of `ax` are in `sig`.
bool within(const Axiom& ax, const Signature& sig);

/// A TBox of CIs and RIs plus an ABox of assertions. Both parts are kept sorted
/// and duplicate-free, so structural equality is set equality.
class Ontology {
 public:
  Ontology() = default;
  explicit Ontology(const std::vector<Axiom>& axioms);

  void add(const Axiom& ax);

  const std::vector<Axiom>& tbox() const noexcept { return tbox_; }
  const std::vector<Axiom>& abox() const noexcept { return abox_; }
  std::vector<Axiom> axioms() const;
  std::size_t size() const noexcept { return tbox_.size() + abox_.size(); }
  bool empty() const noexcept { return size() == 0; }

  /// N_C(O), N_R(O), N_I(O); Top and Bottom are not names.
  const Signature& signature() const noexcept { return signature_; }

  Ontology tbox_only() const;

  bool operator==(const Ontology& other) const {
    return tbox_ == other.tbox_ && abox_ == other.abox_;
  }

 private:
  std::vector<Axiom> tbox_;
  std::vector<Axiom> abox_;
  Signature signature_;
};

inline Signature signature(const Ontology& o) { return o.signature(); }

bool contains_bottom(const Axiom& ax) noexcept;
bool contains_bottom(const Ontology& o) noexcept;

/// A⊑B, A1⊓A2⊑B, ∃r.A⊑B or A⊑∃r.B with every atom a concept name.
bool is_normal_form_ci(const Axiom& ax) noexcept;
/// A role assertion, or C(a) with C of shape A, A⊓B or ∃r.A.
bool is_normal_form_iq(const Axiom& ax) noexcept;
/// Normal-form concept: A, A⊓B, ∃r.A over concept names.
bool is_normal_form_concept(const Concept& c) noexcept;

/// Normal-form CI/IQ/RI where atoms may additionally be Top. This is the
/// query language accepted by the reasoner and the model checker.
bool is_query_form(const Axiom& ax) noexcept;

/// TBox in normal form (RIs allowed), ABox restricted to atomic concept
/// assertions and role assertions.
bool is_normalized(const Ontology& o) noexcept;

/// Rewrites `o` into an equivalent normalized ontology over an extended
/// signature. Fresh concept names carry the prefix "N_" and are numbered in
/// traversal order, starting above any N_<k> already present in `o`.
/// Throws Error(BottomNotSupported) when ⊥ occurs and Error(TopNotSupported)
/// when ⊤ occurs on the left of an inclusion in a way no normal form can
/// express (⊤⊑C, ∃r.⊤⊑C).
Ontology normalize(const Ontology& o);

// Functional-style rendering, the same syntax the parser accepts.
std::string to_string(const Concept& c);
std::string to_string(const Axiom& ax);

}  // namespace elhgeo
