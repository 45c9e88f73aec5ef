#ifndef CUWEB_TESTS_FIXTURES_HPP_
#define CUWEB_TESTS_FIXTURES_HPP_

#include <map>
#include <random>
#include <vector>

#include "cuweb/abgroups.hpp"
#include "cuweb/monoid.hpp"
#include "cuweb/systems.hpp"
#include "cuweb/webbing.hpp"

namespace cuweb::fixtures {

// {0} alone.
inline FiniteOrderedMonoid pointMonoid() {
  return validateMonoid({"0"}, 0, {{0}}, {{1}}, true);
}

inline FinAbGroup trivialGroup() { return FinAbGroup{{}}; }
inline FinAbGroup cyclic(long long d) { return FinAbGroup{{d}}; }
inline FinAbGroup zGroup() { return FinAbGroup{{0}}; }
inline FinAbGroup klein() { return FinAbGroup{{2, 2}}; }

// System over a base with every fiber trivial.
inline GroupSystem trivialFiberSystem(const FiniteOrderedMonoid& base) {
  const int n = base.size();
  std::vector<FinAbGroup> fibers(n, trivialGroup());
  std::map<std::pair<Idx, Idx>, GroupHom> edges;
  for (Idx s = 0; s < n; ++s)
    for (Idx t = 0; t < n; ++t)
      if (base.carrier.le(s, t))
        edges[{s, t}] = zeroHom(trivialGroup(), trivialGroup());
  return validateSystem(base, std::move(fibers), std::move(edges));
}

// Constant fiber G over every nonzero element; edges are identities away
// from zero and the zero map out of zero.
inline GroupSystem constantFiberSystem(const FiniteOrderedMonoid& base,
                                       const FinAbGroup& g) {
  const int n = base.size();
  const Idx z = base.carrier.zero;
  std::vector<FinAbGroup> fibers(n, g);
  fibers[z] = trivialGroup();
  std::map<std::pair<Idx, Idx>, GroupHom> edges;
  for (Idx s = 0; s < n; ++s)
    for (Idx t = 0; t < n; ++t) {
      if (!base.carrier.le(s, t)) continue;
      if (s == z)
        edges[{s, t}] = zeroHom(fibers[s], fibers[t]);
      else
        edges[{s, t}] = identityHom(g);
    }
  return validateSystem(base, std::move(fibers), std::move(edges));
}

// The Z/2 system over truncatedNaturals(1): fiber(1) = fiber(inf) = Z/2,
// edge(1,inf) = id. Its web W5 has five elements.
inline GroupSystem z2sys() {
  return constantFiberSystem(truncatedNaturals(1), cyclic(2));
}

inline WebbedSemigroup w5() { return web(z2sys()); }

// Same base, but edge(1,inf) is the zero map.
inline GroupSystem z2sysZeroEdge() {
  FiniteOrderedMonoid base = truncatedNaturals(1);
  std::vector<FinAbGroup> fibers = {trivialGroup(), cyclic(2), cyclic(2)};
  std::map<std::pair<Idx, Idx>, GroupHom> edges;
  for (Idx s = 0; s < 3; ++s)
    for (Idx t = 0; t < 3; ++t) {
      if (!base.carrier.le(s, t)) continue;
      if (s == t)
        edges[{s, t}] = identityHom(fibers[s]);
      else if (s == 0)
        edges[{s, t}] = zeroHom(fibers[s], fibers[t]);
      else
        edges[{s, t}] = zeroHom(fibers[s], fibers[t]);
    }
  return validateSystem(base, std::move(fibers), std::move(edges));
}

// Level-graded system: a monotone level map c with c(0)=0 and a chain of
// groups/homs between consecutive levels. Functorial by construction; the
// generic way this suite builds randomized systems.
struct LevelChain {
  std::vector<FinAbGroup> groups;   // per level, groups[0] trivial
  std::vector<GroupHom> step;       // step[i]: groups[i] -> groups[i+1]
};

inline GroupSystem levelSystem(const FiniteOrderedMonoid& base,
                               const std::vector<int>& level,
                               const LevelChain& chain) {
  const int n = base.size();
  std::vector<FinAbGroup> fibers(n);
  for (Idx s = 0; s < n; ++s) fibers[s] = chain.groups[level[s]];
  std::map<std::pair<Idx, Idx>, GroupHom> edges;
  for (Idx s = 0; s < n; ++s)
    for (Idx t = 0; t < n; ++t) {
      if (!base.carrier.le(s, t)) continue;
      GroupHom h = identityHom(fibers[s]);
      for (int l = level[s]; l < level[t]; ++l) h = compose(chain.step[l], h);
      edges[{s, t}] = h;
    }
  return validateSystem(base, std::move(fibers), std::move(edges));
}

// ---- randomized generation ------------------------------------------------

using Rng = std::mt19937;

inline int pick(Rng& rng, int lo, int hi) {  // inclusive
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Small positively ordered bases with <= 6 elements.
inline FiniteOrderedMonoid randomBase(Rng& rng) {
  switch (pick(rng, 0, 4)) {
    case 0: return truncatedNaturals(pick(rng, 0, 4));
    case 1: return productMonoid(truncatedNaturals(0), truncatedNaturals(0));
    case 2: return productMonoid(truncatedNaturals(0), truncatedNaturals(1));
    case 3: return pointMonoid();
    default: return truncatedNaturals(pick(rng, 1, 3));
  }
}

inline FinAbGroup randomFiberGroup(Rng& rng) {
  switch (pick(rng, 0, 4)) {
    case 0: return trivialGroup();
    case 1: return cyclic(2);
    case 2: return cyclic(3);
    case 3: return cyclic(4);
    default: return klein();
  }
}

// Hom whose existence is guaranteed: zero map, or identity when the groups
// agree, or a canonical quotient/multiplication when available.
inline GroupHom randomStep(Rng& rng, const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<GroupHom> candidates;
  candidates.push_back(zeroHom(a, b));
  if (a == b) {
    candidates.push_back(identityHom(a));
    if (a.rank() == 1 && a.factors[0] >= 2) {
      std::vector<std::vector<long long>> m = {{2}};
      candidates.push_back(hom(a, b, m));
    }
  }
  if (a.rank() == 1 && b.rank() == 1 && a.factors[0] >= 1 &&
      b.factors[0] >= 1 && a.factors[0] % b.factors[0] == 0) {
    candidates.push_back(hom(a, b, {{1}}));  // quotient Z/d -> Z/e, e | d
  }
  return candidates[pick(rng, 0, static_cast<int>(candidates.size()) - 1)];
}

// Random monotone level map with level(0) = 0.
inline std::vector<int> randomLevels(Rng& rng, const FiniteOrderedMonoid& base,
                                     int maxLevel) {
  const int n = base.size();
  std::vector<int> raw(n);
  for (int i = 0; i < n; ++i) raw[i] = pick(rng, 0, maxLevel);
  raw[base.carrier.zero] = 0;
  // Monotone closure: level(s) = max of raw over the down-set of s.
  std::vector<int> level(n, 0);
  for (Idx s = 0; s < n; ++s)
    for (Idx t = 0; t < n; ++t)
      if (base.carrier.le(t, s)) level[s] = std::max(level[s], raw[t]);
  return level;
}

inline GroupSystem randomSystem(Rng& rng) {
  FiniteOrderedMonoid base = randomBase(rng);
  const int maxLevel = pick(rng, 1, 3);
  LevelChain chain;
  chain.groups.push_back(trivialGroup());
  for (int l = 1; l <= maxLevel; ++l)
    chain.groups.push_back(randomFiberGroup(rng));
  for (int l = 0; l < maxLevel; ++l)
    chain.step.push_back(randomStep(rng, chain.groups[l], chain.groups[l + 1]));
  std::vector<int> level = randomLevels(rng, base, maxLevel);
  return levelSystem(base, level, chain);
}

// Morphisms out of a given system that are valid by construction.
// kind 0: identity; kind 1: collapse onto the point system; kind 2: fiber
// multiplication by k (alpha = id).
inline GroupSystem pointSystem() { return trivialFiberSystem(pointMonoid()); }

inline SystemMorphism collapseMorphism(const GroupSystem& s,
                                       const GroupSystem& point) {
  const int n = s.base.size();
  SystemMorphism m;
  m.alpha.assign(n, point.base.carrier.zero);
  for (Idx i = 0; i < n; ++i)
    m.eta.push_back(zeroHom(s.fiber[i], point.fiber[point.base.carrier.zero]));
  return m;
}

inline SystemMorphism fiberMultiplier(const GroupSystem& s, long long k) {
  const int n = s.base.size();
  SystemMorphism m;
  m.alpha.resize(n);
  for (Idx i = 0; i < n; ++i) {
    m.alpha[i] = i;
    std::vector<std::vector<long long>> mat(
        s.fiber[i].rank(), std::vector<long long>(s.fiber[i].rank(), 0));
    for (int r = 0; r < s.fiber[i].rank(); ++r) mat[r][r] = k;
    m.eta.push_back(hom(s.fiber[i], s.fiber[i], std::move(mat)));
  }
  return m;
}

// A composable random pair out of `sys`, returned with the intermediate and
// final systems.
struct MorphismPair {
  GroupSystem a, b, c;
  SystemMorphism first, second;
};

inline MorphismPair randomComposablePair(Rng& rng) {
  MorphismPair p;
  p.a = randomSystem(rng);
  switch (pick(rng, 0, 2)) {
    case 0:
      p.b = p.a;
      p.first = fiberMultiplier(p.a, pick(rng, 1, 3));
      break;
    case 1:
      p.b = pointSystem();
      p.first = collapseMorphism(p.a, p.b);
      break;
    default:
      p.b = p.a;
      p.first = identityMorphism(p.a);
      break;
  }
  switch (pick(rng, 0, 2)) {
    case 0:
      p.c = p.b;
      p.second = fiberMultiplier(p.b, pick(rng, 1, 3));
      break;
    case 1:
      p.c = pointSystem();
      p.second = collapseMorphism(p.b, p.c);
      break;
    default:
      p.c = p.b;
      p.second = identityMorphism(p.b);
      break;
  }
  return p;
}

}  // namespace cuweb::fixtures

#endif  // CUWEB_TESTS_FIXTURES_HPP_
