#include "elhgeo/canonical.hpp"

#include <algorithm>
#include <map>

#include "elhgeo/error.hpp"
#include "elhgeo/universe.hpp"

namespace elhgeo {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Concept filler_concept(const std::string& filler) {
  return filler.empty() ? Concept::top() : Concept::atomic(filler);
}

}  // namespace

Concept element_concept(const CanonicalElement& e) {
  return std::visit(
      overloaded{
          [](const NamedElement& n) -> Concept {
            throw Error(ErrorKind::InvalidArgument,
                        "named element '" + n.individual +
                            "' does not stand for a concept");
          },
          [](const TopElement&) { return Concept::top(); },
          [](const AtomElement& a) { return Concept::atomic(a.name); },
          [](const ConjElement& c) {
            return Concept::conj(Concept::atomic(c.left),
                                 Concept::atomic(c.right));
          },
          [](const ExistsElement& x) {
            return Concept::exists(x.role, filler_concept(x.filler));
          },
      },
      e);
}

std::string label(const CanonicalElement& e) {
  if (const auto* n = std::get_if<NamedElement>(&e)) return n->individual;
  return "c_" + to_string(element_concept(e));
}

Element CanonicalModel::id_of(const CanonicalElement& e) const {
  const auto it = std::find(elements.begin(), elements.end(), e);
  if (it == elements.end())
    throw Error(ErrorKind::UnknownElement,
                "no canonical element " + label(e));
  return static_cast<Element>(it - elements.begin());
}

std::size_t canonical_domain_size(const Signature& sig) {
  const std::size_t nc = sig.concepts.size();
  return sig.individuals.size() + (nc + 1) + nc * nc +
         sig.roles.size() * (nc + 1);
}

CanonicalModel build_canonical(const Ontology& o) {
  if (contains_bottom(o))
    throw Error(ErrorKind::BottomNotSupported, "ontology contains Bottom");
  return build_canonical(Reasoner(o));
}

CanonicalModel build_canonical(const Reasoner& reasoner) {
  const Ontology& o = reasoner.ontology();
  const Signature& sig = o.signature();

  CanonicalModel m;
  auto& els = m.elements;
  for (const auto& a : sig.individuals) els.push_back(NamedElement{a});
  const std::size_t top_id = els.size();
  els.push_back(TopElement{});
  for (const auto& a : sig.concepts) els.push_back(AtomElement{a});
  for (const auto& a : sig.concepts)
    for (const auto& b : sig.concepts) els.push_back(ConjElement{a, b});
  for (const auto& r : sig.roles) {
    for (const auto& b : sig.concepts) els.push_back(ExistsElement{r, b});
    els.push_back(ExistsElement{r, ""});
  }

  // Δ_u: c_B for the fillers B ∈ N_C ∪ {⊤}, keyed like ExistsElement.
  std::map<std::string, Element> unit;
  unit[""] = top_id;
  {
    Element id = top_id + 1;
    for (const auto& a : sig.concepts) unit[a] = id++;
  }
  std::vector<std::string> fillers(sig.concepts.begin(), sig.concepts.end());
  fillers.push_back("");

  auto& in = m.interpretation;
  in = FiniteInterpretation(els.size());
  for (const auto& a : sig.concepts) in.declare_concept(a);
  for (const auto& r : sig.roles) in.declare_role(r);

  const std::size_t first_unnamed = sig.individuals.size();
  {
    Element id = 0;
    for (const auto& a : sig.individuals) in.set_individual(a, id++);
  }

  // Concept extensions.
  for (const auto& a : sig.concepts) {
    Element id = 0;
    for (const auto& ind : sig.individuals) {
      if (reasoner.entails(instance(Concept::atomic(a), ind)))
        in.add_to_concept(a, id);
      ++id;
    }
    for (Element d = first_unnamed; d < els.size(); ++d)
      if (reasoner.entails(subclass(element_concept(els[d]), atom(a))))
        in.add_to_concept(a, d);
  }

  // reach[A] = {B | T ⊨ A ⊑ ∃r.B}, for the fourth role clause.
  for (const auto& r : sig.roles) {
    std::map<std::string, std::vector<std::string>> reach;
    for (const auto& a : sig.concepts)
      for (const auto& b : fillers)
        if (reasoner.entails(
                subclass(atom(a), Concept::exists(r, filler_concept(b)))))
          reach[a].push_back(b);

    // (a, b) with O ⊨ r(a, b); (a, c_B) with O ⊨ ∃r.B(a).
    for (const auto& x : sig.individuals) {
      const Element xi = in.individual(x);
      for (const auto& y : sig.individuals)
        if (reasoner.entails(related(r, x, y)))
          in.add_to_role(r, xi, in.individual(y));
      for (const auto& b : fillers)
        if (reasoner.entails(
                instance(Concept::exists(r, filler_concept(b)), x)))
          in.add_to_role(r, xi, unit.at(b));
    }

    for (Element d = first_unnamed; d < els.size(); ++d) {
      // (c_{∃s.B}, c_B) with s ⊑* r.
      if (const auto* ex = std::get_if<ExistsElement>(&els[d]))
        if (reasoner.roles().subsumed(ex->role, r))
          in.add_to_role(r, d, unit.at(ex->filler));
      // (c_D, c_B) with T ⊨ D ⊑ A and T ⊨ A ⊑ ∃r.B for some A ∈ N_C.
      const Concept dc = element_concept(els[d]);
      for (const auto& [a, bs] : reach) {
        if (!reasoner.entails(subclass(dc, atom(a)))) continue;
        for (const auto& b : bs) in.add_to_role(r, d, unit.at(b));
      }
    }
  }
  return m;
}

std::vector<CanonicalMismatch> verify_canonical(const Ontology& o,
                                                const FiniteInterpretation& i) {
  return verify_canonical(Reasoner(o), i);
}

std::vector<CanonicalMismatch> verify_canonical(const Reasoner& reasoner,
                                                const FiniteInterpretation& i) {
  std::vector<CanonicalMismatch> out;
  for (const Axiom& ax : AxiomUniverse(reasoner.ontology().signature())) {
    const bool sat = satisfies(i, ax);
    const bool ent = reasoner.entails(ax);
    if (sat != ent) out.push_back({ax, sat, ent});
  }
  return out;
}

}  // namespace elhgeo
