#include "elhgeo/faithfulness.hpp"

#include <algorithm>
#include <numeric>
#include <mutex>
#include <random>
#include <thread>
#include <unordered_set>

#include <openssl/evp.h>

#include "elhgeo/canonical.hpp"
#include "elhgeo/error.hpp"
#include "elhgeo/parser.hpp"

namespace elhgeo {
namespace {

using Clock = std::chrono::steady_clock;

bool mentions_top(const Axiom& ax) {
  if (const auto* ci = std::get_if<ConceptInclusion>(&ax))
    return ci->sub.contains_top() || ci->sup.contains_top();
  if (const auto* ca = std::get_if<ConceptAssertion>(&ax))
    return ca->cls.contains_top();
  return false;
}

/// Universe positions to check: all of them, or a seeded sample of `limit`.
std::vector<std::size_t> selection(std::size_t size, std::size_t limit,
                                   std::uint64_t seed) {
  std::vector<std::size_t> out;
  if (limit == 0 || limit >= size) {
    out.resize(size);
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
  }
  // Floyd's sampling: `limit` distinct positions in O(limit).
  std::mt19937_64 rng(seed);
  std::unordered_set<std::size_t> chosen;
  for (std::size_t j = size - limit; j < size; ++j) {
    const std::size_t t = std::uniform_int_distribution<std::size_t>(0, j)(rng);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  out.assign(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

FaithfulnessReport pipeline(const Ontology& o, bool convex,
                            const FaithfulnessOptions& opts) {
  if (contains_bottom(o))
    throw Error(ErrorKind::BottomNotSupported, "ontology contains Bottom");
  const auto start = Clock::now();
  const Reasoner reasoner(o);
  const CanonicalModel canonical = build_canonical(reasoner);
  const GeometricModel g =
      build_geometric(canonical.interpretation, o.signature(), convex);
  FaithfulnessReport r = verify_faithfulness(reasoner, g, opts);
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      Clock::now() - start);
  return r;
}

}  // namespace

std::string ontology_digest(const Ontology& o) {
  const std::string text = serialize(o);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int k = 0; k < len; ++k) {
    out.push_back(hex[md[k] >> 4]);
    out.push_back(hex[md[k] & 15]);
  }
  return out;
}

FaithfulnessReport verify_faithfulness(const Reasoner& reasoner,
                                       const GeometricModel& g,
                                       const FaithfulnessOptions& opts) {
  const auto start = Clock::now();
  const Ontology& o = reasoner.ontology();
  const AxiomUniverse universe(o.signature(), opts.include_top);

  FaithfulnessReport r;
  r.digest = ontology_digest(o);
  r.universe_size = universe.size();
  r.indices = selection(universe.size(), opts.limit, opts.seed);
  const std::size_t n = r.indices.size();
  r.checked = n;

  // Each worker fills its own slots; nothing is shared but read-only state.
  std::vector<char> geometric(n), entailed(n);
  const CheckOptions check_opts{opts.membership};
  const auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t k = first; k < n; k += stride) {
      const Axiom ax = universe[r.indices[k]];
      geometric[k] = check(g, ax, check_opts).verdict;
      entailed[k] = reasoner.entails(ax);
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(opts.jobs, n));
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (std::size_t t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        try {
          work(t, jobs);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  r.verdicts.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t index = r.indices[k];
    r.verdicts[k] = geometric[k] != 0;
    switch (class_of(universe.family_of(index))) {
      case AxiomClass::IQ: ++r.iq_checked; break;
      case AxiomClass::CI: ++r.ci_checked; break;
      case AxiomClass::RI: ++r.ri_checked; break;
    }
    if (geometric[k] == entailed[k]) continue;
    Axiom ax = universe[index];
    const bool top = mentions_top(ax);
    (top ? r.top_mismatches : r.mismatches)
        .push_back({index, std::move(ax), geometric[k] != 0, entailed[k] != 0});
  }
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      Clock::now() - start);
  return r;
}

FaithfulnessReport verify_strong_faithfulness(const Ontology& o,
                                              const FaithfulnessOptions& opts) {
  return pipeline(o, true, opts);
}

FaithfulnessReport verify_nonconvex_faithfulness(
    const Ontology& o, const FaithfulnessOptions& opts) {
  return pipeline(o, false, opts);
}

nlohmann::ordered_json to_json(const FaithfulnessReport& r, bool with_elapsed,
                               bool with_top) {
  const auto list = [](const std::vector<Mismatch>& ms) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& m : ms) {
      nlohmann::ordered_json e;
      e["axiom"] = to_string(m.axiom);
      e["geometric"] = m.geometric;
      e["entailed"] = m.entailed;
      arr.push_back(std::move(e));
    }
    return arr;
  };
  nlohmann::ordered_json j;
  j["ontology"] = r.digest;
  j["universe"] = r.universe_size;
  j["checked"] = r.checked;
  j["counts"] = {{"IQ", r.iq_checked}, {"CI", r.ci_checked}, {"RI", r.ri_checked}};
  j["mismatches"] = list(r.mismatches);
  if (with_top) j["top_mismatches"] = list(r.top_mismatches);
  if (with_elapsed) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

}  // namespace elhgeo
