#pragma once

// The finite canonical model I_O of a normalized ELH ontology.
//
// Δ = N_I(A) ∪ {c_⊤} ∪ {c_A} ∪ {c_{A⊓B}} ∪ {c_{∃r.B} | B ∈ N_C ∪ {⊤}}, in
// exactly that order; names in each block sorted, conjunction pairs ordered
// and enumerated lexicographically, ⊤ after all names as existential filler.

#include <string>
#include <variant>
#include <vector>

#include "elhgeo/interpretation.hpp"
#include "elhgeo/reasoner.hpp"
#include "elhgeo/syntax.hpp"

namespace elhgeo {

struct NamedElement {
  std::string individual;
  bool operator==(const NamedElement&) const = default;
};
struct TopElement {
  bool operator==(const TopElement&) const = default;
};
struct AtomElement {
  std::string name;
  bool operator==(const AtomElement&) const = default;
};
struct ConjElement {
  std::string left;
  std::string right;
  bool operator==(const ConjElement&) const = default;
};
/// c_{∃r.B}; an empty filler stands for ⊤.
struct ExistsElement {
  std::string role;
  std::string filler;
  bool operator==(const ExistsElement&) const = default;
};

using CanonicalElement = std::variant<NamedElement, TopElement, AtomElement,
                                      ConjElement, ExistsElement>;

/// The concept D that c_D stands for (⊤ for c_⊤); throws for named elements.
Concept element_concept(const CanonicalElement& e);
/// Human-readable label: "a", "c_Top", "c_A", "c_And(A B)", "c_Some(r Top)".
std::string label(const CanonicalElement& e);

struct CanonicalModel {
  std::vector<CanonicalElement> elements;  // index = element id
  FiniteInterpretation interpretation;

  Element id_of(const CanonicalElement& e) const;
};

/// |N_I| + (|N_C|+1) + |N_C|² + |N_R|·(|N_C|+1).
std::size_t canonical_domain_size(const Signature& sig);

/// Every entailment test is delegated to the reasoner. Throws
/// Error(NotNormalized) / Error(BottomNotSupported).
CanonicalModel build_canonical(const Ontology& o);
CanonicalModel build_canonical(const Reasoner& reasoner);

struct CanonicalMismatch {
  Axiom axiom;
  bool satisfied;
  bool entailed;
};

/// Compares I ⊨ α with O ⊨ α for every normal-form IQ and CI and every RI over
/// sig(O). Empty for the true canonical model.
std::vector<CanonicalMismatch> verify_canonical(const Ontology& o,
                                                const FiniteInterpretation& i);
std::vector<CanonicalMismatch> verify_canonical(const Reasoner& reasoner,
                                                const FiniteInterpretation& i);

}  // namespace elhgeo
