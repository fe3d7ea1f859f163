#include <charconv>
#include <map>
#include <optional>

#include "elhgeo/error.hpp"
#include "elhgeo/syntax.hpp"

namespace elhgeo {
namespace {

// Drops ⊤ conjuncts: C⊓⊤ = ⊤⊓C = C.
Concept simplify(const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::Conj: {
      Concept l = simplify(c.left());
      Concept r = simplify(c.right());
      if (l.is_top()) return r;
      if (r.is_top()) return l;
      return Concept::conj(std::move(l), std::move(r));
    }
    case Concept::Kind::Exists:
      return Concept::exists(c.role(), simplify(c.filler()));
    default:
      return c;
  }
}

class Normalizer {
 public:
  explicit Normalizer(const Ontology& o) {
    for (const auto& name : o.signature().concepts) {
      if (!is_fresh_name(name)) continue;
      const auto digits = std::string_view(name).substr(kFreshPrefix.size());
      std::size_t k = 0;
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), k);
      if (ec == std::errc{} && ptr == digits.data() + digits.size() &&
          !digits.empty())
        next_ = std::max(next_, k + 1);
    }
  }

  void inclusion(const Concept& sub, const Concept& sup) {
    emit_ci(simplify(sub), simplify(sup));
  }

  void assertion(const Concept& c, const std::string& ind) {
    emit_assertion(simplify(c), ind);
  }

  void keep(const Axiom& ax) { out_.add(ax); }

  Ontology result() && { return std::move(out_); }

 private:
  void emit_ci(const Concept& sub, const Concept& sup) {
    if (sup.is_top()) return;
    if (sup.is_conj()) {
      emit_ci(sub, sup.left());
      emit_ci(sub, sup.right());
      return;
    }
    if (sub.is_top())
      throw Error(ErrorKind::TopNotSupported,
                  "Top on the left-hand side has no normal form: " +
                      to_string(subclass(sub, sup)));

    Concept lhs = lhs_form(sub);
    Concept rhs = sup.is_atomic()
                      ? sup
                      : Concept::exists(sup.role(), positive_atom(sup.filler()));
    if (!lhs.is_atomic() && !rhs.is_atomic())
      lhs = negative_atom(lhs);
    out_.add(subclass(std::move(lhs), std::move(rhs)));
  }

  void emit_assertion(const Concept& c, const std::string& ind) {
    if (c.is_conj()) {
      emit_assertion(c.left(), ind);
      emit_assertion(c.right(), ind);
      return;
    }
    out_.add(instance(positive_atom(c), ind));
  }

  Concept lhs_form(const Concept& c) {
    if (c.is_atomic()) return c;
    if (c.is_conj())
      return Concept::conj(negative_atom(c.left()), negative_atom(c.right()));
    if (c.filler().is_top())
      throw Error(ErrorKind::TopNotSupported,
                  "Some(r Top) on the left-hand side has no normal form: " +
                      to_string(c));
    return Concept::exists(c.role(), negative_atom(c.filler()));
  }

  // Atom standing for `c` where `c` occurs negatively (left of ⊑). Needs
  // c ⊑ N; the converse is added as well so N ≡ c.
  Concept negative_atom(const Concept& c) {
    if (c.is_atomic()) return c;
    // c ⊑ N with ⊤ anywhere in c needs ⊤ on some left-hand side.
    if (c.contains_top())
      throw Error(ErrorKind::TopNotSupported,
                  "Top inside a left-hand side has no normal form: " + to_string(c));
    return define(c);
  }

  // Atom standing for `c` where `c` occurs positively (right of ⊑, ABox).
  // Needs N ⊑ c; the converse is added when expressible.
  Concept positive_atom(const Concept& c) {
    if (c.is_atomic()) return c;
    if (c.is_top()) {
      // An unconstrained fresh name is a conservative stand-in for ⊤ here.
      if (!top_name_) top_name_ = fresh();
      return *top_name_;
    }
    return define(c);
  }

  Concept define(const Concept& c) {
    if (auto it = defined_.find(c); it != defined_.end()) return it->second;
    Concept n = fresh();
    defined_.emplace(c, n);
    emit_ci(n, c);
    if (!c.contains_top()) emit_ci(c, n);
    return n;
  }

  Concept fresh() {
    return Concept::atomic(std::string(kFreshPrefix) + std::to_string(next_++));
  }

  Ontology out_;
  std::map<Concept, Concept> defined_;
  std::optional<Concept> top_name_;
  std::size_t next_ = 0;
};

}  // namespace

Ontology normalize(const Ontology& o) {
  if (contains_bottom(o))
    throw Error(ErrorKind::BottomNotSupported,
                "Bottom is not supported in ELH input");
  Normalizer n(o);
  for (const auto& ax : o.tbox()) {
    if (const auto* ci = std::get_if<ConceptInclusion>(&ax))
      n.inclusion(ci->sub, ci->sup);
    else
      n.keep(ax);
  }
  for (const auto& ax : o.abox()) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&ax))
      n.assertion(ca->cls, ca->individual);
    else
      n.keep(ax);
  }
  return std::move(n).result();
}

}  // namespace elhgeo
