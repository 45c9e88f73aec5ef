#ifndef CUWEB_WEBBING_HPP_
#define CUWEB_WEBBING_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuweb/systems.hpp"

namespace cuweb {

// The webbed semigroup S_G of a group system (S, G): pairs (s, g) with the
// derived order (s,g) <= (t,h) iff s <= t and edge(s,t)(g) = h, and sum
// (s,g)+(t,h) = (s+t, edge(s,s+t)(g) + edge(t,s+t)(h)).
//
// Systems with infinite cyclic fibers materialize within a symmetric window
// [-B, B] per free component; sums escaping the window are undefined and the
// carrier is flagged partial.
struct WebbedSemigroup {
  Carrier carrier;
  std::vector<std::pair<Idx, GElem>> pairs;  // element -> (base, fiber value)
  GroupSystem system;                        // provenance
  long long window = 0;                      // 0 when fully materialized
  bool windowed = false;

  int size() const { return carrier.size(); }
  Idx baseOf(Idx i) const { return pairs[i].first; }
  const GElem& fiberOf(Idx i) const { return pairs[i].second; }
  std::optional<Idx> indexOf(Idx base, const GElem& g) const;
};

// Materializes S_G and verifies (PC), (PD), (S0) and compactness of the
// neutral element at construction; a failure aborts as an internal error
// since those are theorems for webbed semigroups. Refuses non-positively
// ordered bases (the sum formula needs s <= s+t).
WebbedSemigroup web(const GroupSystem& sys, long long window = 8);

// A morphism between materialized carriers given by an index table.
// Validation: zero to zero, additive on defined sums, monotone, way-below
// preserving.
struct CarrierMorphism {
  std::vector<Idx> map;
};
CarrierMorphism validateCarrierMorphism(const Carrier& from, const Carrier& to,
                                        std::vector<Idx> map);

// The webbing of a system morphism: (s,g) -> (alpha(s), eta_s(g)). Validity
// as an ordered-monoid morphism is a theorem; violation aborts.
CarrierMorphism webMorphism(const WebbedSemigroup& from,
                            const WebbedSemigroup& to,
                            const SystemMorphism& m);

// web(compose(m1, m2)) == webMorphism(m2) o webMorphism(m1), pointwise.
bool checkWebFunctoriality(const GroupSystem& a, const GroupSystem& b,
                           const GroupSystem& c, const SystemMorphism& m1,
                           const SystemMorphism& m2, long long window = 8);

// The way-below relation of the web: (s,g) << (t,h) iff s <<_base t and
// edge(s,t)(g) = h. For finite bases this is checked equal to the relation
// computed from the stabilizing-sequence definition on the web carrier.
std::vector<std::vector<uint8_t>> webWayBelow(const WebbedSemigroup& w);

// Preservation theorems: hypothesis on the base (plus stability of G where
// relevant) against the conclusion on the web. The pair of verdicts is
// returned; hypothesis-holds with conclusion-fails flags a theorem
// violation.
enum class PreservationTag { WCtoPWC, O5, ADUnderStability };
struct PreservationVerdict {
  bool hypothesis = false;
  bool conclusion = false;
  bool applicable = true;  // false when stability fails for the AD tag
  bool violation = false;
  AxiomVerdict baseVerdict;
  AxiomVerdict webVerdict;
};
PreservationVerdict checkPreservation(const GroupSystem& sys,
                                      PreservationTag tag,
                                      long long window = 8);

}  // namespace cuweb

#endif  // CUWEB_WEBBING_HPP_
