#include "elhgeo/universe.hpp"

#include "elhgeo/error.hpp"

namespace elhgeo {

AxiomClass class_of(AxiomFamily f) noexcept {
  switch (f) {
    case AxiomFamily::ConceptIQ:
    case AxiomFamily::ConjIQ:
    case AxiomFamily::ExistsIQ:
    case AxiomFamily::RoleIQ:
      return AxiomClass::IQ;
    case AxiomFamily::RoleRI:
      return AxiomClass::RI;
    default:
      return AxiomClass::CI;
  }
}

AxiomUniverse::AxiomUniverse(const Signature& sig, bool include_top)
    : roles_(sig.roles.begin(), sig.roles.end()),
      individuals_(sig.individuals.begin(), sig.individuals.end()) {
  for (const auto& c : sig.concepts) atoms_.push_back(Concept::atomic(c));
  if (include_top) atoms_.push_back(Concept::top());
  const std::size_t c = atoms_.size();
  const std::size_t r = roles_.size();
  const std::size_t i = individuals_.size();
  counts_ = {c * i,     c * c * i, r * c * i, r * i * i, c * c,
             c * c * c, r * c * c, r * c * c, r * r};
  for (auto n : counts_) total_ += n;
}

AxiomFamily AxiomUniverse::family_of(std::size_t index) const {
  if (index >= total_)
    throw Error(ErrorKind::InvalidArgument, "axiom index out of range");
  std::size_t f = 0;
  while (index >= counts_[f]) index -= counts_[f++];
  return static_cast<AxiomFamily>(f);
}

Axiom AxiomUniverse::operator[](std::size_t index) const {
  if (index >= total_)
    throw Error(ErrorKind::InvalidArgument, "axiom index out of range");
  std::size_t f = 0;
  while (index >= counts_[f]) index -= counts_[f++];

  // Mixed-radix decoding, leftmost component most significant.
  const auto take = [&index](std::size_t radix) {
    const std::size_t digit = index % radix;
    index /= radix;
    return digit;
  };
  const std::size_t nc = atoms_.size();
  const std::size_t nr = roles_.size();
  const std::size_t ni = individuals_.size();

  switch (static_cast<AxiomFamily>(f)) {
    case AxiomFamily::ConceptIQ: {
      const auto a = take(ni), c = take(nc);
      return ConceptAssertion{atoms_[c], individuals_[a]};
    }
    case AxiomFamily::ConjIQ: {
      const auto a = take(ni), c2 = take(nc), c1 = take(nc);
      return ConceptAssertion{Concept::conj(atoms_[c1], atoms_[c2]),
                              individuals_[a]};
    }
    case AxiomFamily::ExistsIQ: {
      const auto a = take(ni), c = take(nc), r = take(nr);
      return ConceptAssertion{Concept::exists(roles_[r], atoms_[c]),
                              individuals_[a]};
    }
    case AxiomFamily::RoleIQ: {
      const auto b = take(ni), a = take(ni), r = take(nr);
      return RoleAssertion{roles_[r], individuals_[a], individuals_[b]};
    }
    case AxiomFamily::SubsumptionCI: {
      const auto d = take(nc), c = take(nc);
      return ConceptInclusion{atoms_[c], atoms_[d]};
    }
    case AxiomFamily::ConjCI: {
      const auto d = take(nc), c2 = take(nc), c1 = take(nc);
      return ConceptInclusion{Concept::conj(atoms_[c1], atoms_[c2]),
                              atoms_[d]};
    }
    case AxiomFamily::ExistsLhsCI: {
      const auto d = take(nc), c = take(nc), r = take(nr);
      return ConceptInclusion{Concept::exists(roles_[r], atoms_[c]),
                              atoms_[d]};
    }
    case AxiomFamily::ExistsRhsCI: {
      const auto d = take(nc), r = take(nr), c = take(nc);
      return ConceptInclusion{atoms_[c],
                              Concept::exists(roles_[r], atoms_[d])};
    }
    case AxiomFamily::RoleRI: {
      const auto s = take(nr), r = take(nr);
      return RoleInclusion{roles_[r], roles_[s]};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "bad axiom family");
}

}  // namespace elhgeo
