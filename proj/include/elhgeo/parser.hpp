#pragma once

// Line-oriented functional syntax for ELH (".elh" files):
//
//   stmt    := "SubClassOf(" concept concept ")"
//            | "SubRoleOf(" role role ")"
//            | "ClassAssertion(" concept ind ")"
//            | "RoleAssertion(" role ind ind ")"
//   concept := "Top" | "Bottom" | name | "And(" concept concept+ ")"
//            | "Some(" role concept ")"
//
// One statement per line, '#' starts a comment line, blank lines are ignored.
// n-ary And is right-folded into binary conjunctions.

#include <string>
#include <string_view>

#include "elhgeo/syntax.hpp"

namespace elhgeo {

/// Throws SyntaxError on malformed input and Error(BottomNotSupported) when
/// Bottom occurs.
Ontology parse_ontology(std::string_view text);

/// A single statement, surrounding whitespace allowed. Bottom is rejected as in
/// parse_ontology.
Axiom parse_axiom(std::string_view text);

/// A single concept expression. Bottom parses (callers decide).
Concept parse_concept(std::string_view text);

/// Canonical form: one statement per line, lines sorted bytewise.
std::string serialize(const Ontology& o);

}  // namespace elhgeo
