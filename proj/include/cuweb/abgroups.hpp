#ifndef CUWEB_ABGROUPS_HPP_
#define CUWEB_ABGROUPS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "cuweb/errors.hpp"

namespace cuweb {

// Finitely generated abelian group in invariant-factor form. factors[i] == 0
// encodes an infinite cyclic factor, factors[i] == d >= 1 an order-d cyclic
// one. The trivial group is the empty factor list. Elements are integer
// vectors reduced componentwise into [0, d_i) for torsion factors.
struct FinAbGroup {
  std::vector<long long> factors;

  int rank() const { return static_cast<int>(factors.size()); }
  bool isTrivial() const { return factors.empty(); }
  bool isFinite() const {
    for (long long d : factors)
      if (d == 0) return false;
    return true;
  }
  long long order() const {  // 0 when infinite
    long long o = 1;
    for (long long d : factors) {
      if (d == 0) return 0;
      o *= d;
    }
    return o;
  }
  bool operator==(const FinAbGroup&) const = default;
};

using GElem = std::vector<long long>;

GElem reduceElem(const FinAbGroup& g, GElem v);
GElem zeroElem(const FinAbGroup& g);
GElem addElem(const FinAbGroup& g, const GElem& a, const GElem& b);
GElem negElem(const FinAbGroup& g, const GElem& a);

// Homomorphism as an integer matrix: column i is the image of the i-th
// domain generator; mat has codomain.rank() rows.
struct GroupHom {
  FinAbGroup domain;
  FinAbGroup codomain;
  std::vector<std::vector<long long>> matrix;
};

// Validates the torsion condition d_i * (column i) == 0 in the codomain.
// Throws Error("NotWellDefined", ..., {factor index}) on failure.
GroupHom hom(const FinAbGroup& a, const FinAbGroup& b,
             std::vector<std::vector<long long>> matrix);

GroupHom identityHom(const FinAbGroup& a);
GroupHom zeroHom(const FinAbGroup& a, const FinAbGroup& b);
GElem apply(const GroupHom& h, const GElem& g);

// compose(h2, h1) = h2 after h1. Throws Error("DomainMismatch") when the
// objects do not line up.
GroupHom compose(const GroupHom& h2, const GroupHom& h1);

// Equality as homomorphisms (agree on all generators).
bool homEqual(const GroupHom& a, const GroupHom& b);

bool isBijectiveHom(const GroupHom& h);

// Complete enumeration for finite groups; windowed enumeration (components
// of infinite factors range over [-B, B]) otherwise. `partial` is set when a
// window was used. Throws Error("Unbounded") when infinite factors are
// present and no window is given.
struct Enumeration {
  std::vector<GElem> elements;
  bool partial = false;
};
Enumeration elements(const FinAbGroup& g,
                     std::optional<long long> window = std::nullopt);

// Colimit of a finite chain A_1 -> A_2 -> ... -> A_k: the terminal group
// with the composite canonical maps. An empty chain is not expressible here;
// use colimitChainOf for the single-object case.
struct ChainColimit {
  FinAbGroup object;
  std::vector<GroupHom> canonical;  // A_i -> colimit
};
ChainColimit colimitChain(const std::vector<GroupHom>& maps);
ChainColimit colimitChainOf(const FinAbGroup& only);

}  // namespace cuweb

#endif  // CUWEB_ABGROUPS_HPP_
