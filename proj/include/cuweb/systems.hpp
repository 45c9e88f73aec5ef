#ifndef CUWEB_SYSTEMS_HPP_
#define CUWEB_SYSTEMS_HPP_

#include <map>
#include <utility>
#include <vector>

#include "cuweb/abgroups.hpp"
#include "cuweb/axioms.hpp"
#include "cuweb/monoid.hpp"

namespace cuweb {

// A system of groups over a finite ordered monoid: one fiber per base
// element and one connecting hom per comparable pair, functorial, with a
// trivial fiber over zero. Edges are stored for all comparable pairs, not a
// generating set, so validation is pure table checking.
struct GroupSystem {
  FiniteOrderedMonoid base;
  std::vector<FinAbGroup> fiber;
  std::map<std::pair<Idx, Idx>, GroupHom> edge;

  const GroupHom& edgeAt(Idx s, Idx t) const;
  bool hasInfiniteFiber() const {
    for (const auto& f : fiber)
      if (!f.isFinite()) return true;
    return false;
  }
};

// Validates totality on comparable pairs, identity on the diagonal,
// functoriality edge(t,u) o edge(s,t) = edge(s,u), and triviality of the
// fiber at zero. Error kinds: MissingEdge, NotIdentityOnDiagonal,
// FunctorialityFailure, NontrivialFiberAtZero, DomainMismatch.
GroupSystem validateSystem(FiniteOrderedMonoid base,
                           std::vector<FinAbGroup> fibers,
                           std::map<std::pair<Idx, Idx>, GroupHom> edges);

// Morphism of systems: a monoid map on bases plus a per-element fiber hom,
// natural with respect to the edges. Stored without back-references; all
// operations take the source and target systems explicitly.
struct SystemMorphism {
  std::vector<Idx> alpha;       // base map, indexed by source elements
  std::vector<GroupHom> eta;    // eta[s]: fiber_S(s) -> fiber_T(alpha(s))
};

// Error kinds: NotMonoidMorphism, NotOrderPreserving,
// NaturalitySquareFailure, DomainMismatch.
SystemMorphism validateMorphism(const GroupSystem& source,
                                const GroupSystem& target,
                                std::vector<Idx> alpha,
                                std::vector<GroupHom> eta);

SystemMorphism identityMorphism(const GroupSystem& s);

// (beta,nu) o (alpha,eta) = (beta o alpha, nu_alpha o eta) with
// (nu_alpha o eta)_s = nu_{alpha(s)} o eta_s.
SystemMorphism composeSystemMorphisms(const GroupSystem& a,
                                      const GroupSystem& b,
                                      const GroupSystem& c,
                                      const SystemMorphism& first,
                                      const SystemMorphism& second);

// Stability of the functor: edge(s, k*s) is a group isomorphism for every s
// and every k up to stabilization of the multiples.
struct StabilityVerdict {
  bool stable = true;
  Idx s = -1;
  int k = 0;
};
StabilityVerdict checkStability(const GroupSystem& sys);

}  // namespace cuweb

#endif  // CUWEB_SYSTEMS_HPP_
