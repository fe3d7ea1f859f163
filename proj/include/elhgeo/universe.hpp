#pragma once

// The finite universe of normal-form axioms over a signature: every IQ
// A(a), (A1⊓A2)(a), (∃r.A)(a), r(a,b); every CI A⊑B, A1⊓A2⊑B, ∃r.A⊑B,
// A⊑∃r.B; every RI r⊑s. Conjunctions range over ordered pairs.
//
// The universe is indexed rather than materialized: operator[] decodes an
// index in mixed radix, so enumeration is streamed and can be split across
// workers.

#include <array>
#include <cstddef>
#include <iterator>
#include <string>
#include <vector>

#include "elhgeo/syntax.hpp"

namespace elhgeo {

enum class AxiomFamily : std::size_t {
  ConceptIQ,      // A(a)
  ConjIQ,         // (A1⊓A2)(a)
  ExistsIQ,       // (∃r.A)(a)
  RoleIQ,         // r(a,b)
  SubsumptionCI,  // A ⊑ B
  ConjCI,         // A1⊓A2 ⊑ B
  ExistsLhsCI,    // ∃r.A ⊑ B
  ExistsRhsCI,    // A ⊑ ∃r.B
  RoleRI,         // r ⊑ s
};
inline constexpr std::size_t kFamilyCount = 9;

enum class AxiomClass { IQ, CI, RI };
AxiomClass class_of(AxiomFamily f) noexcept;

class AxiomUniverse {
 public:
  /// Atoms range over N_C, plus ⊤ (ordered last) when include_top is set.
  explicit AxiomUniverse(const Signature& sig, bool include_top = false);

  std::size_t size() const noexcept { return total_; }
  std::size_t family_size(AxiomFamily f) const noexcept {
    return counts_[static_cast<std::size_t>(f)];
  }
  AxiomFamily family_of(std::size_t index) const;
  Axiom operator[](std::size_t index) const;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Axiom;
    using difference_type = std::ptrdiff_t;
    using reference = Axiom;
    using pointer = void;

    iterator(const AxiomUniverse* u, std::size_t i) : u_(u), i_(i) {}
    Axiom operator*() const { return (*u_)[i_]; }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++i_;
      return old;
    }
    bool operator==(const iterator& o) const { return i_ == o.i_; }

   private:
    const AxiomUniverse* u_;
    std::size_t i_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, total_}; }

 private:
  std::vector<Concept> atoms_;
  std::vector<std::string> roles_;
  std::vector<std::string> individuals_;
  std::array<std::size_t, kFamilyCount> counts_{};
  std::size_t total_ = 0;
};

inline AxiomUniverse axiom_universe(const Signature& sig,
                                    bool include_top = false) {
  return AxiomUniverse(sig, include_top);
}

}  // namespace elhgeo
