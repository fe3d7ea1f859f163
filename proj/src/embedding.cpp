#include "elhgeo/embedding.hpp"

#include <algorithm>
#include <random>

#include "elhgeo/error.hpp"

namespace elhgeo {
namespace {

std::size_t position(const std::vector<std::string>& names,
                     const std::string& name) {
  const auto it = std::lower_bound(names.begin(), names.end(), name);
  if (it == names.end() || *it != name) return names.size();
  return static_cast<std::size_t>(it - names.begin());
}

[[noreturn]] void unknown(const char* what, const std::string& name) {
  throw Error(ErrorKind::SignatureMismatch,
              std::string(what) + " '" + name + "' is not in the index");
}

nlohmann::ordered_json bits_json(const BinaryVector& v) { return v.bits(); }

BinaryVector bits_from_json(const nlohmann::json& j, std::size_t expected) {
  if (!j.is_array()) throw Error(ErrorKind::Format, "vector must be an array");
  std::vector<int> bits;
  bits.reserve(j.size());
  for (const auto& b : j) {
    const int x = b.get<int>();
    if (x != 0 && x != 1)
      throw Error(ErrorKind::Format, "vector entries must be 0 or 1");
    bits.push_back(x);
  }
  if (bits.size() != expected)
    throw Error(ErrorKind::DimensionMismatch,
                "vector of length " + std::to_string(bits.size()) +
                    ", expected " + std::to_string(expected));
  return BinaryVector::from_bits(bits);
}

}  // namespace

// ---------------------------------------------------------------------------
// IndexSystem

IndexSystem::IndexSystem(const Signature& sig, std::size_t domain_size)
    : individuals_(sig.individuals.begin(), sig.individuals.end()),
      concepts_(sig.concepts.begin(), sig.concepts.end()),
      roles_(sig.roles.begin(), sig.roles.end()),
      domain_size_(domain_size),
      dimension_(individuals_.size() + concepts_.size() +
                 roles_.size() * domain_size) {}

bool IndexSystem::has_individual(const std::string& a) const {
  return position(individuals_, a) < individuals_.size();
}
bool IndexSystem::has_concept(const std::string& c) const {
  return position(concepts_, c) < concepts_.size();
}
bool IndexSystem::has_role(const std::string& r) const {
  return position(roles_, r) < roles_.size();
}

std::size_t IndexSystem::individual_index(const std::string& a) const {
  const auto p = position(individuals_, a);
  if (p == individuals_.size()) unknown("individual", a);
  return p;
}

std::size_t IndexSystem::concept_index(const std::string& c) const {
  const auto p = position(concepts_, c);
  if (p == concepts_.size()) unknown("concept", c);
  return individuals_.size() + p;
}

std::size_t IndexSystem::role_element(const std::string& r, Element e) const {
  const auto p = position(roles_, r);
  if (p == roles_.size()) unknown("role", r);
  if (e >= domain_size_)
    throw Error(ErrorKind::UnknownElement,
                "element " + std::to_string(e) + " outside the domain");
  return individuals_.size() + concepts_.size() + p * domain_size_ + e;
}

Signature IndexSystem::signature() const {
  Signature sig;
  sig.individuals.insert(individuals_.begin(), individuals_.end());
  sig.concepts.insert(concepts_.begin(), concepts_.end());
  sig.roles.insert(roles_.begin(), roles_.end());
  return sig;
}

std::string IndexSystem::coordinate_name(std::size_t i) const {
  if (i < individuals_.size()) return individuals_[i];
  i -= individuals_.size();
  if (i < concepts_.size()) return concepts_[i];
  i -= concepts_.size();
  if (domain_size_ == 0 || i >= roles_.size() * domain_size_)
    throw Error(ErrorKind::InvalidArgument, "coordinate out of range");
  return roles_[i / domain_size_] + "," + std::to_string(i % domain_size_);
}

BinaryVector mu(const FiniteInterpretation& i, const IndexSystem& idx,
                Element d) {
  if (d >= i.domain_size())
    throw Error(ErrorKind::UnknownElement,
                "element " + std::to_string(d) + " outside the domain");
  BinaryVector v(idx.dimension());
  const auto& inds = idx.individuals();
  for (std::size_t k = 0; k < inds.size(); ++k) {
    const auto it = i.individuals().find(inds[k]);
    if (it != i.individuals().end() && it->second == d) v.set(k);
  }
  const auto& cons = idx.concepts();
  for (std::size_t k = 0; k < cons.size(); ++k)
    if (i.in_concept(cons[k], d)) v.set(inds.size() + k);
  for (const auto& r : idx.roles()) {
    const auto it = i.roles().find(r);
    if (it == i.roles().end()) continue;
    // Pairs are sorted, so the successors of d form one contiguous range.
    for (auto p = it->second.lower_bound({d, 0});
         p != it->second.end() && p->first == d; ++p)
      if (p->second < idx.domain_size()) v.set(idx.role_element(r, p->second));
  }
  return v;
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::vector<BinaryVector> vectors)
    : sorted_(std::move(vectors)) {
  std::sort(sorted_.begin(), sorted_.end());
  sorted_.erase(std::unique(sorted_.begin(), sorted_.end()), sorted_.end());
  hashed_.insert(sorted_.begin(), sorted_.end());
}

void VertexSet::insert(const BinaryVector& v) {
  if (!hashed_.insert(v).second) return;
  sorted_.insert(std::lower_bound(sorted_.begin(), sorted_.end(), v), v);
}

bool VertexSet::erase(const BinaryVector& v) {
  if (hashed_.erase(v) == 0) return false;
  sorted_.erase(std::lower_bound(sorted_.begin(), sorted_.end(), v));
  return true;
}

bool VertexSet::contains(const BinaryVector& v, MembershipMode mode) const {
  if (mode == MembershipMode::Hashed) return hashed_.count(v) > 0;
  for (const auto& w : sorted_)
    if (w == v) return true;
  return false;
}

// ---------------------------------------------------------------------------
// GeometricModel

const VertexSet& GeometricModel::concept_region(const std::string& name) const {
  const auto it = eta_con.find(name);
  if (it == eta_con.end()) unknown("concept", name);
  return it->second;
}

const VertexSet& GeometricModel::role_region(const std::string& name) const {
  const auto it = eta_role.find(name);
  if (it == eta_role.end()) unknown("role", name);
  return it->second;
}

const BinaryVector& GeometricModel::individual_point(
    const std::string& name) const {
  const auto it = eta_ind.find(name);
  if (it == eta_ind.end()) unknown("individual", name);
  return it->second;
}

std::size_t GeometricModel::parameters() const {
  std::size_t n = 0;
  for (const auto& [_, v] : eta_ind) n += v.size();
  for (const auto& [_, s] : eta_con)
    for (const auto& v : s) n += v.size();
  for (const auto& [_, s] : eta_role)
    for (const auto& v : s) n += v.size();
  return n;
}

GeometricModel build_geometric(const FiniteInterpretation& i,
                               const Signature& sig, bool convex) {
  GeometricModel g;
  g.index = IndexSystem(sig, i.domain_size());
  g.convex = convex;

  std::vector<BinaryVector> points;
  points.reserve(i.domain_size());
  for (Element d = 0; d < i.domain_size(); ++d)
    points.push_back(mu(i, g.index, d));

  for (const auto& a : sig.individuals) g.eta_ind[a] = points[i.individual(a)];

  for (const auto& c : sig.concepts) {
    std::vector<BinaryVector> region;
    if (const auto it = i.concepts().find(c); it != i.concepts().end())
      for (Element d : it->second) region.push_back(points[d]);
    g.eta_con[c] = VertexSet(std::move(region));
  }
  for (const auto& r : sig.roles) {
    std::vector<BinaryVector> region;
    if (const auto it = i.roles().find(r); it != i.roles().end())
      for (const auto& [d, e] : it->second)
        region.push_back(concat(points[d], points[e]));
    g.eta_role[r] = VertexSet(std::move(region));
  }
  return g;
}

GeometricModel build_geometric(const FiniteInterpretation& i, bool convex) {
  return build_geometric(i, i.signature(), convex);
}

ConvexHull concept_hull(const GeometricModel& g, const std::string& name) {
  return ConvexHull(g.concept_region(name).vectors());
}

ConvexHull role_hull(const GeometricModel& g, const std::string& name) {
  return ConvexHull(g.role_region(name).vectors());
}

void flip_region_bit(GeometricModel& g, const std::string& name,
                     std::size_t member, std::size_t bit, bool role) {
  auto& regions = role ? g.eta_role : g.eta_con;
  const auto it = regions.find(name);
  if (it == regions.end()) unknown(role ? "role" : "concept", name);
  auto& region = it->second;
  if (member >= region.size())
    throw Error(ErrorKind::InvalidArgument,
                "region '" + name + "' has no member " + std::to_string(member));
  BinaryVector v = region.vectors()[member];
  if (bit >= v.size())
    throw Error(ErrorKind::InvalidArgument, "bit out of range");
  region.erase(v);
  v.flip(bit);
  region.insert(v);
}

// ---------------------------------------------------------------------------
// Hull lemma

HullLemmaReport check_binary_hull_lemma(const std::vector<BinaryVector>& gens,
                                        std::size_t trials,
                                        std::uint64_t seed) {
  HullLemmaReport report;
  if (gens.empty()) return report;
  const ConvexHull hull(gens);
  const VertexSet members(gens);
  const std::size_t d = hull.dimension();

  const auto probe = [&](const BinaryVector& v) {
    ++report.probes;
    // A generator satisfies the implication whatever the LP says.
    if (members.contains(v)) return;
    ++report.lp_calls;
    if (hull.contains(v)) report.violations.push_back(v);
  };

  if (d <= 12) {
    report.exhaustive = true;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d); ++bits) {
      BinaryVector v(d);
      for (std::size_t k = 0; k < d; ++k)
        if ((bits >> k) & 1U) v.set(k);
      probe(v);
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
      BinaryVector v(d);
      for (std::size_t k = 0; k < d; ++k)
        if (rng() & 1U) v.set(k);
      probe(v);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::ordered_json export_embedding(const GeometricModel& g) {
  nlohmann::ordered_json j;
  j["dimension"] = g.dimension();
  nlohmann::ordered_json index;
  index["individuals"] = g.index.individuals();
  index["concepts"] = g.index.concepts();
  index["roles"] = g.index.roles();
  index["domain"] = g.index.domain_size();
  j["index"] = std::move(index);

  auto& inds = j["individuals"] = nlohmann::ordered_json::object();
  for (const auto& [a, v] : g.eta_ind) inds[a] = bits_json(v);
  auto& cons = j["concepts"] = nlohmann::ordered_json::object();
  for (const auto& [c, s] : g.eta_con) {
    auto& arr = cons[c] = nlohmann::ordered_json::array();
    for (const auto& v : s) arr.push_back(bits_json(v));
  }
  auto& roles = j["roles"] = nlohmann::ordered_json::object();
  for (const auto& [r, s] : g.eta_role) {
    auto& arr = roles[r] = nlohmann::ordered_json::array();
    for (const auto& v : s) arr.push_back(bits_json(v));
  }
  j["convex"] = g.convex;
  j["parameters"] = g.parameters();
  return j;
}

GeometricModel import_embedding(const nlohmann::json& j) {
  try {
    const auto& index = j.at("index");
    Signature sig;
    for (const auto& a : index.at("individuals"))
      sig.individuals.insert(a.get<std::string>());
    for (const auto& c : index.at("concepts"))
      sig.concepts.insert(c.get<std::string>());
    for (const auto& r : index.at("roles"))
      sig.roles.insert(r.get<std::string>());

    GeometricModel g;
    g.index = IndexSystem(sig, index.at("domain").get<std::size_t>());
    if (j.at("dimension").get<std::size_t>() != g.dimension())
      throw Error(ErrorKind::DimensionMismatch,
                  "declared dimension disagrees with the index");
    const std::size_t m = g.dimension();
    g.convex = j.at("convex").get<bool>();

    for (const auto& [a, v] : j.at("individuals").items()) {
      if (!g.index.has_individual(a)) unknown("individual", a);
      g.eta_ind[a] = bits_from_json(v, m);
    }
    for (const auto& a : sig.individuals)
      if (!g.eta_ind.count(a))
        throw Error(ErrorKind::Format, "no vector for individual '" + a + "'");
    for (const auto& c : sig.concepts) g.eta_con[c];
    for (const auto& r : sig.roles) g.eta_role[r];
    for (const auto& [c, arr] : j.at("concepts").items()) {
      if (!g.index.has_concept(c)) unknown("concept", c);
      std::vector<BinaryVector> region;
      for (const auto& v : arr) region.push_back(bits_from_json(v, m));
      g.eta_con[c] = VertexSet(std::move(region));
    }
    for (const auto& [r, arr] : j.at("roles").items()) {
      if (!g.index.has_role(r)) unknown("role", r);
      std::vector<BinaryVector> region;
      for (const auto& v : arr) region.push_back(bits_from_json(v, 2 * m));
      g.eta_role[r] = VertexSet(std::move(region));
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Format, std::string("embedding JSON: ") + e.what());
  }
}

}  // namespace elhgeo
