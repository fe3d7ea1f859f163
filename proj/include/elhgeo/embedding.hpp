#pragma once

// The map μ from domain elements to binary indicator vectors, the vertex-set
// geometric interpretation η_I built from it, and the pairing map f = ⊕.
//
// Coordinates come in three contiguous blocks: individuals, concept names,
// then one coordinate per (role, element) pair, each block in name order and
// the last one ordered by (role, element id). A role region lives in
// dimension 2·m̂ and holds μ(d) ⊕ μ(e) for every (d, e) ∈ r^I.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "elhgeo/bitvector.hpp"
#include "elhgeo/hull.hpp"
#include "elhgeo/interpretation.hpp"
#include "elhgeo/syntax.hpp"

namespace elhgeo {

class IndexSystem {
 public:
  IndexSystem() = default;
  IndexSystem(const Signature& sig, std::size_t domain_size);

  /// m̂ = |N_I| + |N_C| + |N_R|·|Δ|.
  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t domain_size() const noexcept { return domain_size_; }

  const std::vector<std::string>& individuals() const noexcept {
    return individuals_;
  }
  const std::vector<std::string>& concepts() const noexcept {
    return concepts_;
  }
  const std::vector<std::string>& roles() const noexcept { return roles_; }

  bool has_individual(const std::string& a) const;
  bool has_concept(const std::string& c) const;
  bool has_role(const std::string& r) const;

  // v[a], v[A], v[r,e]. Throw Error(SignatureMismatch) for names outside the
  // index and Error(UnknownElement) for e outside the domain.
  std::size_t individual_index(const std::string& a) const;
  std::size_t concept_index(const std::string& c) const;
  std::size_t role_element(const std::string& r, Element e) const;

  Signature signature() const;

  /// Coordinate names: "a", "A", "r,3".
  std::string coordinate_name(std::size_t i) const;

  bool operator==(const IndexSystem&) const = default;

 private:
  std::vector<std::string> individuals_;
  std::vector<std::string> concepts_;
  std::vector<std::string> roles_;
  std::size_t domain_size_ = 0;
  std::size_t dimension_ = 0;
};

/// μ(d). Throws Error(UnknownElement) for d outside Δ^I.
BinaryVector mu(const FiniteInterpretation& i, const IndexSystem& idx,
                Element d);

/// How VertexSet::contains looks a vector up.
enum class MembershipMode {
  Hashed,      // expected O(m̂)
  LinearScan,  // O(m̂·|S|), the cost model of the complexity analysis
};

/// A finite, duplicate-free set of equal-length binary vectors, iterated in
/// lexicographic order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<BinaryVector> vectors);

  void insert(const BinaryVector& v);
  bool erase(const BinaryVector& v);

  bool contains(const BinaryVector& v,
                MembershipMode mode = MembershipMode::Hashed) const;

  std::size_t size() const noexcept { return sorted_.size(); }
  bool empty() const noexcept { return sorted_.empty(); }
  const std::vector<BinaryVector>& vectors() const noexcept { return sorted_; }
  auto begin() const noexcept { return sorted_.begin(); }
  auto end() const noexcept { return sorted_.end(); }

  bool operator==(const VertexSet& o) const { return sorted_ == o.sorted_; }

 private:
  std::vector<BinaryVector> sorted_;
  std::unordered_set<BinaryVector, BinaryVectorHash> hashed_;
};

/// η_I (convex = false) or η*_I (convex = true). Either way the regions are
/// stored as their vertex sets; with the convex flag they stand for the
/// convex hulls of those sets.
struct GeometricModel {
  IndexSystem index;
  std::map<std::string, BinaryVector> eta_ind;
  std::map<std::string, VertexSet> eta_con;
  std::map<std::string, VertexSet> eta_role;
  bool convex = false;

  std::size_t dimension() const noexcept { return index.dimension(); }

  /// η(A); throws Error(SignatureMismatch).
  const VertexSet& concept_region(const std::string& name) const;
  const VertexSet& role_region(const std::string& name) const;
  const BinaryVector& individual_point(const std::string& name) const;

  /// Total number of stored bits.
  std::size_t parameters() const;

  bool operator==(const GeometricModel&) const = default;
};

/// η_I over `sig`; names of `sig` missing from `i` get empty regions.
/// Throws Error(UnknownName) if an individual of `sig` is not mapped by `i`.
GeometricModel build_geometric(const FiniteInterpretation& i,
                               const Signature& sig, bool convex = false);
/// Uses the interpretation's own signature.
GeometricModel build_geometric(const FiniteInterpretation& i,
                               bool convex = false);

/// η*_I(A) as a hull object over its vertex set.
ConvexHull concept_hull(const GeometricModel& g, const std::string& name);
ConvexHull role_hull(const GeometricModel& g, const std::string& name);

/// Flips coordinate `bit` of vector number `member` (lexicographic position)
/// in the region of concept or role `name`. Used to build corrupted models.
/// Throws Error(InvalidArgument) if the region has no such member.
void flip_region_bit(GeometricModel& g, const std::string& name,
                     std::size_t member, std::size_t bit, bool role = false);

/// Reports on the binary-hull collapse: every binary v ∈ S* is in S.
struct HullLemmaReport {
  std::size_t probes = 0;
  std::size_t lp_calls = 0;
  std::vector<BinaryVector> violations;
  bool exhaustive = false;
  bool holds() const noexcept { return violations.empty(); }
};

/// Probes every binary vector when the dimension is at most 12 and `trials`
/// random binary vectors (seeded) above that.
HullLemmaReport check_binary_hull_lemma(const std::vector<BinaryVector>& gens,
                                        std::size_t trials = 4096,
                                        std::uint64_t seed = 0);

/// {"dimension", "parameters", "index": {"individuals", "concepts", "roles",
///  "domain"}, "individuals", "concepts", "roles", "convex"}; vectors are 0/1
/// arrays.
nlohmann::ordered_json export_embedding(const GeometricModel& g);
GeometricModel import_embedding(const nlohmann::json& j);

}  // namespace elhgeo
