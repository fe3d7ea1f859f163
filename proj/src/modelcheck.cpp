#include "elhgeo/modelcheck.hpp"

#include <set>

#include "elhgeo/error.hpp"

namespace elhgeo {
namespace {

using Clock = std::chrono::steady_clock;

void require_names(const GeometricModel& g, const Axiom& ax) {
  Signature sig;
  collect_names(ax, sig);
  for (const auto& c : sig.concepts)
    if (!g.eta_con.count(c))
      throw Error(ErrorKind::SignatureMismatch,
                  "concept '" + c + "' is not in the model");
  for (const auto& r : sig.roles)
    if (!g.eta_role.count(r))
      throw Error(ErrorKind::SignatureMismatch,
                  "role '" + r + "' is not in the model");
  for (const auto& a : sig.individuals)
    if (!g.eta_ind.count(a))
      throw Error(ErrorKind::SignatureMismatch,
                  "individual '" + a + "' is not in the model");
}

void require_form(const Axiom& ax, bool kind_ok, const char* what) {
  if (!kind_ok || !is_query_form(ax))
    throw Error(ErrorKind::NotNormalFormAxiom,
                std::string("not a normal-form ") + what + ": " + to_string(ax));
}

/// First binary vector of length m, in counting order over the trailing
/// bits, for which `fails` holds. Used when the left-hand side is ⊤: the
/// right-hand region is finite, so one is found after few steps.
template <class Pred>
std::optional<BinaryVector> first_outside(std::size_t m, Pred fails) {
  const std::size_t free_bits = std::min<std::size_t>(m, 24);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << free_bits); ++k) {
    BinaryVector v(m);
    for (std::size_t b = 0; b < free_bits; ++b)
      if ((k >> b) & 1U) v.set(m - 1 - b);
    if (fails(v)) return v;
  }
  return std::nullopt;
}

/// Exists u in the filler region with v ⊕ u ∈ η(r); a ⊤ filler accepts any
/// stored pair whose first half is v.
class Successors {
 public:
  Successors(const GeometricModel& g, const std::string& role,
             const Concept& filler, MembershipMode mode)
      : m_(g.dimension()),
        role_(g.role_region(role)),
        filler_(filler.is_top() ? nullptr : &g.concept_region(filler.name())),
        mode_(mode) {}

  bool any(const BinaryVector& v) const {
    if (!filler_) {
      for (const auto& w : role_)
        if (w.slice(0, m_) == v) return true;
      return false;
    }
    for (const auto& u : *filler_)
      if (role_.contains(concat(v, u), mode_)) return true;
    return false;
  }

 private:
  std::size_t m_;
  const VertexSet& role_;
  const VertexSet* filler_;
  MembershipMode mode_;
};

struct Timer {
  Clock::time_point start = Clock::now();
  std::chrono::nanoseconds elapsed() const { return Clock::now() - start; }
};

}  // namespace

CheckResult check_ci(const GeometricModel& g, const Axiom& ax,
                     const CheckOptions& opts) {
  const Timer timer;
  const auto* ci = std::get_if<ConceptInclusion>(&ax);
  require_form(ax, ci != nullptr, "CI");
  require_names(g, ax);
  const auto& lhs = ci->sub;
  const auto& rhs = ci->sup;
  const auto& idx = g.index;
  const std::size_t m = g.dimension();

  CheckResult res;
  res.verdict = true;
  const auto fail = [&res](const BinaryVector& v) {
    res.verdict = false;
    res.counterexample = v;
  };

  if (lhs.is_exists()) {
    // ∃r.A ⊑ B: a stored pair v⊕u with u[A] = 1 and v[B] = 0.
    if (!rhs.is_top()) {
      const std::size_t b = idx.concept_index(rhs.name());
      const auto& filler = lhs.filler();
      const bool any_filler = filler.is_top();
      const std::size_t a =
          any_filler ? 0 : m + idx.concept_index(filler.name());
      for (const auto& w : g.role_region(lhs.role()))
        if ((any_filler || w.get(a)) && !w.get(b)) {
          fail(w);
          break;
        }
    }
  } else if (rhs.is_atom()) {
    // A ⊑ B and A1 ⊓ A2 ⊑ B.
    std::vector<Concept> conjuncts;
    const auto keep = [&conjuncts](const Concept& a) {
      if (!a.is_top()) conjuncts.push_back(a);
    };
    if (lhs.is_conj()) {
      keep(lhs.left());
      keep(lhs.right());
    } else {
      keep(lhs);
    }
    if (!rhs.is_top()) {
      const std::size_t b = idx.concept_index(rhs.name());
      if (conjuncts.empty()) {
        // ⊤ ⊑ B: η(B) is finite.
        if (auto v = first_outside(m, [b](const BinaryVector& x) {
              return !x.get(b);
            }))
          fail(*v);
        else
          res.verdict = false;
      } else {
        std::vector<std::size_t> others;
        for (std::size_t k = 1; k < conjuncts.size(); ++k)
          others.push_back(idx.concept_index(conjuncts[k].name()));
        for (const auto& v : g.concept_region(conjuncts[0].name())) {
          bool in_all = true;
          for (auto o : others) in_all = in_all && v.get(o);
          if (in_all && !v.get(b)) {
            fail(v);
            break;
          }
        }
      }
    }
  } else {
    // A ⊑ ∃r.B: every v ∈ η(A) needs some u ∈ η(B) with v⊕u ∈ η(r).
    const Successors succ(g, rhs.role(), rhs.filler(), opts.membership);
    if (lhs.is_top()) {
      if (auto v = first_outside(
              m, [&succ](const BinaryVector& x) { return !succ.any(x); }))
        fail(*v);
      else
        res.verdict = false;
    } else {
      for (const auto& v : g.concept_region(lhs.name()))
        if (!succ.any(v)) {
          fail(v);
          break;
        }
    }
  }
  res.elapsed = timer.elapsed();
  return res;
}

CheckResult check_iq(const GeometricModel& g, const Axiom& ax,
                     const CheckOptions& opts) {
  const Timer timer;
  require_form(ax, is_iq(ax), "IQ");
  require_names(g, ax);
  CheckResult res;
  if (const auto* ra = std::get_if<RoleAssertion>(&ax)) {
    res.verdict = g.role_region(ra->role).contains(
        concat(g.individual_point(ra->subject), g.individual_point(ra->object)),
        opts.membership);
  } else {
    const auto& ca = std::get<ConceptAssertion>(ax);
    const BinaryVector& v = g.individual_point(ca.individual);
    const auto bit = [&](const Concept& atom) {
      return atom.is_top() || v.get(g.index.concept_index(atom.name()));
    };
    const Concept& c = ca.cls;
    if (c.is_atom())
      res.verdict = bit(c);
    else if (c.is_conj())
      res.verdict = bit(c.left()) && bit(c.right());
    else
      res.verdict =
          Successors(g, c.role(), c.filler(), opts.membership).any(v);
  }
  res.elapsed = timer.elapsed();
  return res;
}

CheckResult check_ri(const GeometricModel& g, const Axiom& ax,
                     const CheckOptions& opts) {
  const Timer timer;
  const auto* ri = std::get_if<RoleInclusion>(&ax);
  require_form(ax, ri != nullptr, "RI");
  require_names(g, ax);
  CheckResult res;
  res.verdict = true;
  const auto& sup = g.role_region(ri->sup);
  for (const auto& w : g.role_region(ri->sub))
    if (!sup.contains(w, opts.membership)) {
      res.verdict = false;
      res.counterexample = w;
      break;
    }
  res.elapsed = timer.elapsed();
  return res;
}

CheckResult check(const GeometricModel& g, const Axiom& ax,
                  const CheckOptions& opts) {
  if (!is_query_form(ax))
    throw Error(ErrorKind::NotNormalFormAxiom,
                "not a normal-form axiom: " + to_string(ax));
  if (!g.convex) {
    const Timer timer;
    Evaluation e = evaluate(g, ax);
    CheckResult res;
    res.verdict = e.holds;
    if (!is_iq(ax)) res.counterexample = std::move(e.witness);
    res.elapsed = timer.elapsed();
    return res;
  }
  if (is_ci(ax)) return check_ci(g, ax, opts);
  if (is_ri(ax)) return check_ri(g, ax, opts);
  return check_iq(g, ax, opts);
}

// ---------------------------------------------------------------------------
// Set semantics

namespace {

struct Extension {
  bool all = false;  // the whole space
  std::set<BinaryVector> points;

  bool contains(const BinaryVector& v) const { return all || points.count(v); }
};

class Evaluator {
 public:
  explicit Evaluator(const GeometricModel& g) : g_(g), m_(g.dimension()) {}

  Extension ext(const Concept& c) const {
    Extension e;
    switch (c.kind()) {
      case Concept::Kind::Top:
        if (m_ == 0)
          e.points.insert(BinaryVector(0));  // ℝ⁰ is a single point
        else
          e.all = true;
        break;
      case Concept::Kind::Bottom:
        break;
      case Concept::Kind::Atomic: {
        const auto& r = g_.concept_region(c.name());
        e.points.insert(r.begin(), r.end());
        break;
      }
      case Concept::Kind::Conj: {
        Extension l = ext(c.left());
        Extension r = ext(c.right());
        if (l.all) return r;
        if (r.all) return l;
        for (const auto& v : l.points)
          if (r.points.count(v)) e.points.insert(v);
        break;
      }
      case Concept::Kind::Exists: {
        const Extension inner = ext(c.filler());
        for (const auto& w : g_.role_region(c.role()))
          if (inner.contains(w.slice(m_, m_))) e.points.insert(w.slice(0, m_));
        break;
      }
    }
    return e;
  }

  Evaluation holds(const Axiom& ax) const {
    Evaluation out;
    if (const auto* ci = std::get_if<ConceptInclusion>(&ax)) {
      const Extension sub = ext(ci->sub);
      const Extension sup = ext(ci->sup);
      out.holds = true;
      if (sup.all) return out;
      if (sub.all) {
        out.holds = false;
        out.witness = first_outside(
            m_, [&sup](const BinaryVector& v) { return !sup.contains(v); });
        return out;
      }
      for (const auto& v : sub.points)
        if (!sup.points.count(v)) {
          out.holds = false;
          out.witness = v;
          break;
        }
    } else if (const auto* ri = std::get_if<RoleInclusion>(&ax)) {
      out.holds = true;
      const auto& sup = g_.role_region(ri->sup);
      for (const auto& w : g_.role_region(ri->sub))
        if (!sup.contains(w)) {
          out.holds = false;
          out.witness = w;
          break;
        }
    } else if (const auto* ca = std::get_if<ConceptAssertion>(&ax)) {
      out.holds = ext(ca->cls).contains(g_.individual_point(ca->individual));
    } else {
      const auto& ra = std::get<RoleAssertion>(ax);
      out.holds = g_.role_region(ra.role).contains(concat(
          g_.individual_point(ra.subject), g_.individual_point(ra.object)));
    }
    return out;
  }

 private:
  const GeometricModel& g_;
  std::size_t m_;
};

}  // namespace

Evaluation evaluate(const GeometricModel& g, const Axiom& ax) {
  if (contains_bottom(ax))
    throw Error(ErrorKind::BottomNotSupported, "axiom contains Bottom");
  require_names(g, ax);
  return Evaluator(g).holds(ax);
}

nlohmann::ordered_json to_json(const Axiom& ax, const CheckResult& r,
                               bool with_elapsed) {
  nlohmann::ordered_json j;
  j["axiom"] = to_string(ax);
  j["verdict"] = r.verdict;
  if (with_elapsed)
    j["elapsed_us"] =
        std::chrono::duration_cast<std::chrono::microseconds>(r.elapsed)
            .count();
  if (r.counterexample)
    j["counterexample"] = r.counterexample->bits();
  else
    j["counterexample"] = nullptr;
  return j;
}

}  // namespace elhgeo
