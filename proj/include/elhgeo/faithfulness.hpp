#pragma once

// End-to-end check of strong IQ and TBox faithfulness: build I_O, embed it,
// and compare the geometric verdict of every normal-form axiom over sig(O)
// with O's entailments.

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "elhgeo/embedding.hpp"
#include "elhgeo/modelcheck.hpp"
#include "elhgeo/reasoner.hpp"
#include "elhgeo/syntax.hpp"
#include "elhgeo/universe.hpp"

namespace elhgeo {

struct Mismatch {
  std::size_t index;  // position in the axiom universe
  Axiom axiom;
  bool geometric;
  bool entailed;
};

struct FaithfulnessReport {
  std::string digest;
  std::size_t universe_size = 0;
  std::size_t checked = 0;
  std::size_t iq_checked = 0;
  std::size_t ci_checked = 0;
  std::size_t ri_checked = 0;
  /// Sorted by universe index.
  std::vector<Mismatch> mismatches;
  /// Mismatches on axioms with a ⊤ atom; only populated with include_top and
  /// never counted against faithfulness.
  std::vector<Mismatch> top_mismatches;
  /// Universe indices checked, ascending, with the geometric verdict of each.
  std::vector<std::size_t> indices;
  std::vector<bool> verdicts;
  std::chrono::milliseconds elapsed{0};

  bool faithful() const noexcept { return mismatches.empty(); }
};

struct FaithfulnessOptions {
  bool include_top = false;
  /// Check at most this many axioms (0 = all). A capped run samples its
  /// axioms uniformly without replacement using `seed`.
  std::size_t limit = 0;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  MembershipMode membership = MembershipMode::Hashed;
};

/// O → I_O → η*_{I_O}, checked with the vertex-set algorithms.
/// Throws Error(NotNormalized) / Error(BottomNotSupported).
FaithfulnessReport verify_strong_faithfulness(
    const Ontology& o, const FaithfulnessOptions& opts = {});

/// O → I_O → η_{I_O}, checked with the set semantics.
FaithfulnessReport verify_nonconvex_faithfulness(
    const Ontology& o, const FaithfulnessOptions& opts = {});

/// Compares an arbitrary model with the reasoner's entailments over
/// sig(reasoner.ontology()).
FaithfulnessReport verify_faithfulness(const Reasoner& reasoner,
                                       const GeometricModel& g,
                                       const FaithfulnessOptions& opts = {});

/// Hex SHA-256 of the serialized ontology.
std::string ontology_digest(const Ontology& o);

/// {"ontology", "universe", "checked", "counts": {"IQ", "CI", "RI"},
///  "mismatches": [{"axiom", "geometric", "entailed"}], "top_mismatches"
///  (with include_top), "elapsed_ms"}.
nlohmann::ordered_json to_json(const FaithfulnessReport& r,
                               bool with_elapsed = true,
                               bool with_top = false);

}  // namespace elhgeo
