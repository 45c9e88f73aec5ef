#include "cuweb/systems.hpp"

namespace cuweb {

const GroupHom& GroupSystem::edgeAt(Idx s, Idx t) const {
  auto it = edge.find({s, t});
  if (it == edge.end())
    throw Error("MissingEdge", "no edge for comparable pair", {s, t});
  return it->second;
}

GroupSystem validateSystem(FiniteOrderedMonoid base,
                           std::vector<FinAbGroup> fibers,
                           std::map<std::pair<Idx, Idx>, GroupHom> edges) {
  const Carrier& c = base.carrier;
  const int n = c.size();
  if (static_cast<int>(fibers.size()) != n)
    throw Error("DomainMismatch", "one fiber per base element required");
  if (!fibers[c.zero].isTrivial())
    throw Error("NontrivialFiberAtZero", "fiber over 0 must be trivial",
                {c.zero});

  for (Idx s = 0; s < n; ++s)
    for (Idx t = 0; t < n; ++t) {
      if (!c.le(s, t)) continue;
      auto it = edges.find({s, t});
      if (it == edges.end())
        throw Error("MissingEdge", "edge missing for comparable pair", {s, t});
      const GroupHom& h = it->second;
      if (h.domain != fibers[s] || h.codomain != fibers[t])
        throw Error("DomainMismatch", "edge endpoints do not match fibers",
                    {s, t});
    }

  for (Idx s = 0; s < n; ++s)
    if (!homEqual(edges.at({s, s}), identityHom(fibers[s])))
      throw Error("NotIdentityOnDiagonal", "edge(s,s) must be the identity",
                  {s});

  // Functoriality on all comparable triples; hom equality is checked on
  // generators, which is exact also for infinite cyclic factors.
  for (Idx s = 0; s < n; ++s)
    for (Idx t = 0; t < n; ++t) {
      if (!c.le(s, t)) continue;
      for (Idx u = 0; u < n; ++u) {
        if (!c.le(t, u)) continue;
        GroupHom composite = compose(edges.at({t, u}), edges.at({s, t}));
        if (!homEqual(composite, edges.at({s, u})))
          throw Error("FunctorialityFailure",
                      "edge(t,u) o edge(s,t) != edge(s,u)", {s, t, u});
      }
    }

  GroupSystem sys;
  sys.base = std::move(base);
  sys.fiber = std::move(fibers);
  sys.edge = std::move(edges);
  return sys;
}

SystemMorphism validateMorphism(const GroupSystem& source,
                                const GroupSystem& target,
                                std::vector<Idx> alpha,
                                std::vector<GroupHom> eta) {
  const Carrier& cs = source.base.carrier;
  const Carrier& ct = target.base.carrier;
  const int n = cs.size();
  if (static_cast<int>(alpha.size()) != n)
    throw Error("DomainMismatch", "alpha must be total on the source base");
  if (static_cast<int>(eta.size()) != n)
    throw Error("DomainMismatch", "eta must be total on the source base");
  for (Idx s = 0; s < n; ++s)
    if (alpha[s] < 0 || alpha[s] >= ct.size())
      throw Error("DomainMismatch", "alpha value out of range", {s});

  if (alpha[cs.zero] != ct.zero)
    throw Error("NotMonoidMorphism", "alpha(0) != 0", {cs.zero});
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      if (alpha[cs.add[a][b]] != ct.add[alpha[a]][alpha[b]])
        throw Error("NotMonoidMorphism", "alpha(a+b) != alpha(a)+alpha(b)",
                    {a, b});
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b) {
      if (cs.le(a, b) && !ct.le(alpha[a], alpha[b]))
        throw Error("NotOrderPreserving", "a<=b but alpha(a)!<=alpha(b)",
                    {a, b});
      if (cs.wb(a, b) && !ct.wb(alpha[a], alpha[b]))
        throw Error("NotOrderPreserving", "a<<b but alpha(a)!<<alpha(b)",
                    {a, b});
    }

  for (Idx s = 0; s < n; ++s) {
    if (eta[s].domain != source.fiber[s] ||
        eta[s].codomain != target.fiber[alpha[s]])
      throw Error("DomainMismatch", "eta endpoints do not match fibers", {s});
  }

  // Naturality: eta_t o edge_S(s,t) = edge_T(alpha s, alpha t) o eta_s.
  for (Idx s = 0; s < n; ++s)
    for (Idx t = 0; t < n; ++t) {
      if (!cs.le(s, t)) continue;
      GroupHom lhs = compose(eta[t], source.edgeAt(s, t));
      GroupHom rhs = compose(target.edgeAt(alpha[s], alpha[t]), eta[s]);
      if (!homEqual(lhs, rhs))
        throw Error("NaturalitySquareFailure", "naturality square fails",
                    {s, t});
    }

  return SystemMorphism{std::move(alpha), std::move(eta)};
}

SystemMorphism identityMorphism(const GroupSystem& s) {
  SystemMorphism m;
  const int n = s.base.size();
  m.alpha.resize(n);
  for (Idx i = 0; i < n; ++i) {
    m.alpha[i] = i;
    m.eta.push_back(identityHom(s.fiber[i]));
  }
  return m;
}

SystemMorphism composeSystemMorphisms(const GroupSystem& a,
                                      const GroupSystem& b,
                                      const GroupSystem& c,
                                      const SystemMorphism& first,
                                      const SystemMorphism& second) {
  (void)c;
  const int n = a.base.size();
  if (static_cast<int>(first.alpha.size()) != n)
    throw Error("NotComposable", "first morphism not defined on the source");
  SystemMorphism out;
  out.alpha.resize(n);
  for (Idx s = 0; s < n; ++s) {
    Idx mid = first.alpha[s];
    if (mid < 0 || mid >= b.base.size())
      throw Error("NotComposable", "intermediate index out of range", {s});
    out.alpha[s] = second.alpha[mid];
    out.eta.push_back(compose(second.eta[mid], first.eta[s]));
  }
  return out;
}

namespace {

bool edgeIsIso(const GroupHom& h) {
  if (h.domain.isFinite() && h.codomain.isFinite()) return isBijectiveHom(h);
  if (h.domain.factors == std::vector<long long>{0} &&
      h.codomain.factors == std::vector<long long>{0})
    return h.matrix[0][0] == 1 || h.matrix[0][0] == -1;
  throw Error("Unbounded",
              "stability check supports finite fibers and Z -> Z edges only");
}

}  // namespace

StabilityVerdict checkStability(const GroupSystem& sys) {
  const Carrier& c = sys.base.carrier;
  for (Idx s = 0; s < c.size(); ++s) {
    // Walk k*s until it stabilizes; every intermediate edge s <= k*s must be
    // an isomorphism.
    Idx cur = s;
    for (int k = 2; k <= c.size() + 1; ++k) {
      Idx nxt = c.add[cur][s];
      if (nxt == Carrier::kUndefined) break;
      bool stabilized = (nxt == cur);
      cur = nxt;
      if (!edgeIsIso(sys.edgeAt(s, cur))) return {false, s, k};
      if (stabilized) break;
    }
  }
  return {};
}

}  // namespace cuweb
