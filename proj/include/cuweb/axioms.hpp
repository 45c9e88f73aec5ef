#ifndef CUWEB_AXIOMS_HPP_
#define CUWEB_AXIOMS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "cuweb/monoid.hpp"

namespace cuweb {

enum class Axiom { PC, PD, S0, WC, PWC, O5, O6, AU, AD };

Axiom axiomFromTag(const std::string& tag);
std::string axiomTag(Axiom a);

// Exhaustive quantifier elimination over a finite carrier.
//
// holds=false comes with a witness tuple that re-checks as a genuine
// violation (see witnessViolates). certified=false means some quantified
// instance was skipped because a sum escaped the window of a partially
// materialized carrier; a positive verdict then reads "holds on window".
struct AxiomVerdict {
  Axiom axiom;
  bool holds = true;
  bool certified = true;
  std::vector<Idx> witness;  // violating tuple, per-axiom layout
  int n = 0;                 // multiplier for AU / AD witnesses
  std::string note;
};

AxiomVerdict checkAxiom(const Carrier& c, Axiom axiom);

// Re-evaluates the axiom's defining formula on a claimed failure witness.
bool witnessViolates(const Carrier& c, Axiom axiom,
                     const std::vector<Idx>& witness, int n);

}  // namespace cuweb

#endif  // CUWEB_AXIOMS_HPP_
