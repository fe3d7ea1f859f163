#pragma once

// Satisfaction of normal-form axioms in a geometric model, decided on vertex
// sets. Concept membership of a stored vector is read off its concept bit,
// role membership is a lookup in the role's vertex set. Atoms equal to ⊤
// denote the whole space.

#include <chrono>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "elhgeo/bitvector.hpp"
#include "elhgeo/embedding.hpp"
#include "elhgeo/syntax.hpp"

namespace elhgeo {

struct CheckResult {
  bool verdict = false;
  std::chrono::nanoseconds elapsed{0};
  /// Witness of failure for CIs and RIs: the offending vector of the
  /// left-hand region (a point of ℝ^m̂ or, for RIs and ∃r.A ⊑ B, of ℝ^{2m̂}).
  std::optional<BinaryVector> counterexample;
};

struct CheckOptions {
  MembershipMode membership = MembershipMode::Hashed;
};

// Each throws Error(NotNormalFormAxiom) for an axiom of the wrong kind or
// shape and Error(SignatureMismatch) for names outside the model's index.
CheckResult check_ci(const GeometricModel& g, const Axiom& ax,
                     const CheckOptions& opts = {});
CheckResult check_iq(const GeometricModel& g, const Axiom& ax,
                     const CheckOptions& opts = {});
CheckResult check_ri(const GeometricModel& g, const Axiom& ax,
                     const CheckOptions& opts = {});

/// Convex models go through check_ci / check_iq / check_ri; non-convex models
/// through evaluate().
CheckResult check(const GeometricModel& g, const Axiom& ax,
                  const CheckOptions& opts = {});

struct Evaluation {
  bool holds = false;
  std::optional<BinaryVector> witness;
};

/// Set semantics over the stored regions read as finite point sets:
/// (C⊓D) is an intersection, ∃r.C is {v | v⊕u ∈ η(r), u ∈ C}, ⊤ is the whole
/// space. Defined for every ⊥-free ELH axiom, not only normal forms.
Evaluation evaluate(const GeometricModel& g, const Axiom& ax);

/// {"axiom", "verdict", "elapsed_us", "counterexample"}.
nlohmann::ordered_json to_json(const Axiom& ax, const CheckResult& r,
                               bool with_elapsed = true);

}  // namespace elhgeo
