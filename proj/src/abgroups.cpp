#include "cuweb/abgroups.hpp"

namespace cuweb {

GElem reduceElem(const FinAbGroup& g, GElem v) {
  if (static_cast<int>(v.size()) != g.rank())
    throw Error("DomainMismatch", "element rank does not match group");
  for (int i = 0; i < g.rank(); ++i) {
    long long d = g.factors[i];
    if (d >= 1) {
      v[i] %= d;
      if (v[i] < 0) v[i] += d;
    }
  }
  return v;
}

GElem zeroElem(const FinAbGroup& g) { return GElem(g.rank(), 0); }

GElem addElem(const FinAbGroup& g, const GElem& a, const GElem& b) {
  GElem r(g.rank());
  for (int i = 0; i < g.rank(); ++i) r[i] = a[i] + b[i];
  return reduceElem(g, std::move(r));
}

GElem negElem(const FinAbGroup& g, const GElem& a) {
  GElem r(g.rank());
  for (int i = 0; i < g.rank(); ++i) r[i] = -a[i];
  return reduceElem(g, std::move(r));
}

GroupHom hom(const FinAbGroup& a, const FinAbGroup& b,
             std::vector<std::vector<long long>> matrix) {
  if (static_cast<int>(matrix.size()) != b.rank())
    throw Error("DomainMismatch", "matrix must have codomain-rank rows");
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != a.rank())
      throw Error("DomainMismatch", "matrix must have domain-rank columns");
  // Well-definedness: d_i * column(i) lands on the zero class.
  for (int i = 0; i < a.rank(); ++i) {
    long long d = a.factors[i];
    if (d == 0) continue;
    for (int j = 0; j < b.rank(); ++j) {
      long long v = d * matrix[j][i];
      long long dj = b.factors[j];
      bool zero = (dj == 0) ? (v == 0) : (v % dj == 0);
      if (!zero)
        throw Error("NotWellDefined",
                    "torsion condition fails for domain factor " +
                        std::to_string(i),
                    {i, j});
    }
  }
  return GroupHom{a, b, std::move(matrix)};
}

GroupHom identityHom(const FinAbGroup& a) {
  std::vector<std::vector<long long>> m(a.rank(),
                                        std::vector<long long>(a.rank(), 0));
  for (int i = 0; i < a.rank(); ++i) m[i][i] = 1;
  return GroupHom{a, a, std::move(m)};
}

GroupHom zeroHom(const FinAbGroup& a, const FinAbGroup& b) {
  return GroupHom{a, b,
                  std::vector<std::vector<long long>>(
                      b.rank(), std::vector<long long>(a.rank(), 0))};
}

GElem apply(const GroupHom& h, const GElem& g) {
  if (static_cast<int>(g.size()) != h.domain.rank())
    throw Error("DomainMismatch", "element does not lie in the hom's domain");
  GElem r(h.codomain.rank(), 0);
  for (int j = 0; j < h.codomain.rank(); ++j)
    for (int i = 0; i < h.domain.rank(); ++i) r[j] += h.matrix[j][i] * g[i];
  return reduceElem(h.codomain, std::move(r));
}

GroupHom compose(const GroupHom& h2, const GroupHom& h1) {
  if (h1.codomain != h2.domain)
    throw Error("DomainMismatch", "codomain of first map != domain of second");
  const int rows = h2.codomain.rank();
  const int cols = h1.domain.rank();
  const int mid = h1.codomain.rank();
  std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols, 0));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      long long acc = 0;
      for (int k = 0; k < mid; ++k) acc += h2.matrix[r][k] * h1.matrix[k][c];
      long long d = h2.codomain.factors[r];
      if (d >= 1) {
        acc %= d;
        if (acc < 0) acc += d;
      }
      m[r][c] = acc;
    }
  return GroupHom{h1.domain, h2.codomain, std::move(m)};
}

bool homEqual(const GroupHom& a, const GroupHom& b) {
  if (a.domain != b.domain || a.codomain != b.codomain) return false;
  for (int i = 0; i < a.domain.rank(); ++i) {
    GElem gen = zeroElem(a.domain);
    gen[i] = 1;
    if (apply(a, gen) != apply(b, gen)) return false;
  }
  return true;
}

bool isBijectiveHom(const GroupHom& h) {
  if (!h.domain.isFinite() || !h.codomain.isFinite())
    throw Error("Unbounded", "bijectivity check requires finite groups");
  if (h.domain.order() != h.codomain.order()) return false;
  auto dom = elements(h.domain).elements;
  std::vector<GElem> images;
  images.reserve(dom.size());
  for (const auto& g : dom) images.push_back(apply(h, g));
  for (size_t i = 0; i < images.size(); ++i)
    for (size_t j = i + 1; j < images.size(); ++j)
      if (images[i] == images[j]) return false;
  return true;
}

Enumeration elements(const FinAbGroup& g, std::optional<long long> window) {
  Enumeration out;
  if (!g.isFinite() && !window)
    throw Error("Unbounded",
                "infinite cyclic factors present and no window given");
  out.partial = !g.isFinite();
  out.elements.push_back(zeroElem(g));
  for (int i = 0; i < g.rank(); ++i) {
    long long d = g.factors[i];
    std::vector<long long> values;
    if (d >= 1) {
      for (long long v = 0; v < d; ++v) values.push_back(v);
    } else {
      for (long long v = -*window; v <= *window; ++v) values.push_back(v);
    }
    std::vector<GElem> next;
    next.reserve(out.elements.size() * values.size());
    for (const auto& e : out.elements)
      for (long long v : values) {
        GElem e2 = e;
        e2[i] = v;
        next.push_back(std::move(e2));
      }
    out.elements = std::move(next);
  }
  return out;
}

ChainColimit colimitChain(const std::vector<GroupHom>& maps) {
  if (maps.empty())
    throw Error("NotComposable", "empty chain; use colimitChainOf");
  for (size_t i = 0; i + 1 < maps.size(); ++i)
    if (maps[i].codomain != maps[i + 1].domain)
      throw Error("NotComposable", "chain maps do not compose at position " +
                                       std::to_string(i));
  ChainColimit out;
  out.object = maps.back().codomain;
  // canonical(i) = h_{k-1} o ... o h_i; canonical(k) = id.
  const int k = static_cast<int>(maps.size());
  out.canonical.assign(k + 1, identityHom(out.object));
  out.canonical[k] = identityHom(out.object);
  for (int i = k - 1; i >= 0; --i)
    out.canonical[i] = compose(out.canonical[i + 1], maps[i]);
  return out;
}

ChainColimit colimitChainOf(const FinAbGroup& only) {
  return ChainColimit{only, {identityHom(only)}};
}

}  // namespace cuweb
