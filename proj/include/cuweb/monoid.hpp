#ifndef CUWEB_MONOID_HPP_
#define CUWEB_MONOID_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cuweb/errors.hpp"

namespace cuweb {

using Idx = int;

// Table-driven ordered commutative monoid on an indexed finite carrier.
//
// `add[a][b]` may be kUndefined for windowed structures (sums that escape a
// fiber enumeration window); fully materialized finite structures are total.
// `ll` holds the compact-containment (way-below) relation. For validated
// finite ordered monoids ll == leq; webbed and circle carriers install their
// own relation.
struct Carrier {
  static constexpr int kUndefined = -1;

  std::vector<std::string> names;
  Idx zero = 0;
  std::vector<std::vector<Idx>> add;
  std::vector<std::vector<uint8_t>> leq;
  std::vector<std::vector<uint8_t>> ll;
  bool positively_ordered = false;
  bool partial = false;  // true when some sums are undefined (windowed)

  int size() const { return static_cast<int>(names.size()); }
  bool le(Idx a, Idx b) const { return leq[a][b] != 0; }
  bool wb(Idx a, Idx b) const { return ll[a][b] != 0; }

  // kUndefined when the sum escapes the materialized window.
  Idx plus(Idx a, Idx b) const { return add[a][b]; }

  std::optional<Idx> plusOpt(Idx a, Idx b) const {
    Idx r = add[a][b];
    if (r == kUndefined) return std::nullopt;
    return r;
  }

  // n-fold multiple n*x, nullopt if any partial sum is undefined.
  std::optional<Idx> multiple(int n, Idx x) const;

  // Stabilized value of n*x for positive x: the eventual constant of the
  // increasing sequence x, 2x, 3x, ... (exists in a finite carrier).
  std::optional<Idx> infiniteMultiple(Idx x) const;
};

// A finite positively ordered (or merely ordered) commutative monoid,
// validated exhaustively against the table invariants.
struct FiniteOrderedMonoid {
  Carrier carrier;

  int size() const { return carrier.size(); }
};

// Validates the tables and returns the monoid. Throws Error with kinds
// NonAssociative, NonCommutative, BadNeutral, NotPartialOrder,
// IncompatibleSumOrder, NotPositivelyOrdered; `where()` names the violating
// tuple.
FiniteOrderedMonoid validateMonoid(std::vector<std::string> names, Idx zero,
                                   std::vector<std::vector<Idx>> add,
                                   std::vector<std::vector<uint8_t>> leq,
                                   bool positively_ordered);

// {0,...,M,inf} with a(+)b = a+b when <= M else inf; linear order, inf on top.
FiniteOrderedMonoid truncatedNaturals(int M);

// Componentwise sum and order; zero = (0_S, 0_T).
FiniteOrderedMonoid productMonoid(const FiniteOrderedMonoid& S,
                                  const FiniteOrderedMonoid& T);

// The way-below relation of a validated finite ordered monoid. Every
// increasing sequence in a finite poset stabilizes, so the sequence-based
// definition collapses to: x << y iff every z >= y satisfies z >= x, which
// equals <=. The equality is asserted by running that eliminated form, not
// assumed.
std::vector<std::vector<uint8_t>> wayBelow(const FiniteOrderedMonoid& S);

}  // namespace cuweb

#endif  // CUWEB_MONOID_HPP_
