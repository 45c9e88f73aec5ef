#include "cuweb/monoid.hpp"

#include <algorithm>
#include <set>

namespace cuweb {

std::optional<Idx> Carrier::multiple(int n, Idx x) const {
  Idx acc = zero;
  for (int i = 0; i < n; ++i) {
    Idx nxt = add[acc][x];
    if (nxt == kUndefined) return std::nullopt;
    acc = nxt;
  }
  return acc;
}

std::optional<Idx> Carrier::infiniteMultiple(Idx x) const {
  // n*x is increasing for positive x and the carrier is finite, so the
  // sequence stabilizes once (n+1)*x == n*x.
  Idx cur = x;
  for (int step = 0; step <= size() + 1; ++step) {
    Idx nxt = add[cur][x];
    if (nxt == kUndefined) return std::nullopt;
    if (nxt == cur) return cur;
    cur = nxt;
  }
  // Non-monotone multiples cycle without stabilizing; callers that land here
  // are using a non-positively-ordered carrier.
  return std::nullopt;
}

FiniteOrderedMonoid validateMonoid(std::vector<std::string> names, Idx zero,
                                   std::vector<std::vector<Idx>> add,
                                   std::vector<std::vector<uint8_t>> leq,
                                   bool positively_ordered) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw Error("EmptyCarrier", "carrier must be nonempty");
  if (zero < 0 || zero >= n) throw Error("BadNeutral", "zero index out of range", {zero});

  auto checkTable = [&](const auto& t, const std::string& what) {
    if (static_cast<int>(t.size()) != n)
      throw Error("BadTable", what + " must have one row per element");
    for (const auto& row : t)
      if (static_cast<int>(row.size()) != n)
        throw Error("BadTable", what + " must have one column per element");
  };
  checkTable(add, "add");
  checkTable(leq, "leq");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (add[a][b] < 0 || add[a][b] >= n)
        throw Error("BadTable", "add value out of range", {a, b});

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (add[a][b] != add[b][a])
        throw Error("NonCommutative", "a+b != b+a", {a, b});

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (add[add[a][b]][c] != add[a][add[b][c]])
          throw Error("NonAssociative", "(a+b)+c != a+(b+c)", {a, b, c});

  for (int a = 0; a < n; ++a)
    if (add[zero][a] != a)
      throw Error("BadNeutral", "zero+a != a", {a});

  for (int a = 0; a < n; ++a)
    if (!leq[a][a]) throw Error("NotPartialOrder", "order not reflexive", {a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && leq[a][b] && leq[b][a])
        throw Error("NotPartialOrder", "order not antisymmetric", {a, b});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!leq[a][b]) continue;
      for (int c = 0; c < n; ++c)
        if (leq[b][c] && !leq[a][c])
          throw Error("NotPartialOrder", "order not transitive", {a, b, c});
    }

  // Compatibility: a <= b and c <= d imply a+c <= b+d.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!leq[a][b]) continue;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (leq[c][d] && !leq[add[a][c]][add[b][d]])
            throw Error("IncompatibleSumOrder", "a<=b, c<=d but a+c !<= b+d",
                        {a, b, c, d});
    }

  if (positively_ordered)
    for (int a = 0; a < n; ++a)
      if (!leq[zero][a])
        throw Error("NotPositivelyOrdered", "zero !<= a", {a});

  FiniteOrderedMonoid m;
  m.carrier.names = std::move(names);
  m.carrier.zero = zero;
  m.carrier.add = std::move(add);
  m.carrier.leq = std::move(leq);
  m.carrier.positively_ordered = positively_ordered;
  m.carrier.ll = wayBelow(m);
  return m;
}

FiniteOrderedMonoid truncatedNaturals(int M) {
  if (M < 0) throw Error("BadParameter", "M must be >= 0", {M});
  const int n = M + 2;  // 0..M plus infinity at index M+1
  std::vector<std::string> names;
  for (int i = 0; i <= M; ++i) names.push_back(std::to_string(i));
  names.push_back("inf");
  std::vector<std::vector<Idx>> add(n, std::vector<Idx>(n));
  std::vector<std::vector<uint8_t>> leq(n, std::vector<uint8_t>(n));
  const int inf = M + 1;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == inf || b == inf)
        add[a][b] = inf;
      else
        add[a][b] = (a + b <= M) ? a + b : inf;
      leq[a][b] = (a <= b) ? 1 : 0;
    }
  return validateMonoid(std::move(names), 0, std::move(add), std::move(leq),
                        /*positively_ordered=*/true);
}

FiniteOrderedMonoid productMonoid(const FiniteOrderedMonoid& S,
                                  const FiniteOrderedMonoid& T) {
  const Carrier& cs = S.carrier;
  const Carrier& ct = T.carrier;
  const int ns = cs.size(), nt = ct.size();
  const int n = ns * nt;
  auto pack = [&](Idx a, Idx b) { return a * nt + b; };
  std::vector<std::string> names(n);
  std::vector<std::vector<Idx>> add(n, std::vector<Idx>(n));
  std::vector<std::vector<uint8_t>> leq(n, std::vector<uint8_t>(n));
  for (Idx a = 0; a < ns; ++a)
    for (Idx b = 0; b < nt; ++b)
      names[pack(a, b)] = "(" + cs.names[a] + "," + ct.names[b] + ")";
  for (Idx a = 0; a < ns; ++a)
    for (Idx b = 0; b < nt; ++b)
      for (Idx c = 0; c < ns; ++c)
        for (Idx d = 0; d < nt; ++d) {
          add[pack(a, b)][pack(c, d)] = pack(cs.add[a][c], ct.add[b][d]);
          leq[pack(a, b)][pack(c, d)] = (cs.le(a, c) && ct.le(b, d)) ? 1 : 0;
        }
  return validateMonoid(std::move(names), pack(cs.zero, ct.zero),
                        std::move(add), std::move(leq),
                        cs.positively_ordered && ct.positively_ordered);
}

std::vector<std::vector<uint8_t>> wayBelow(const FiniteOrderedMonoid& S) {
  const Carrier& c = S.carrier;
  const int n = c.size();
  std::vector<std::vector<uint8_t>> wb(n, std::vector<uint8_t>(n, 0));
  // Increasing sequences in a finite poset are eventually constant, so a
  // sequence with supremum z contains z itself. x << y therefore fails
  // exactly when some z >= y has z !>= x (the constant-z sequence witnesses
  // it), and holds otherwise.
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      bool ok = true;
      for (Idx z = 0; z < n && ok; ++z)
        if (c.le(y, z) && !c.le(x, z)) ok = false;
      wb[x][y] = ok ? 1 : 0;
    }
  // In this representation << must coincide with <=; anything else is an
  // internal error.
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      if ((wb[x][y] != 0) != c.le(x, y))
        throw Error("Internal", "way-below differs from <= on a finite monoid",
                    {x, y});
  return wb;
}

}  // namespace cuweb
