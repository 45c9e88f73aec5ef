#include "cuweb/axioms.hpp"

#include <map>

namespace cuweb {

namespace {

// multiples[k][x] = k*x, Carrier::kUndefined when a partial sum escapes the
// window. Row 0 is the zero row.
std::vector<std::vector<Idx>> multiplesTable(const Carrier& c, int maxK) {
  const int n = c.size();
  std::vector<std::vector<Idx>> m(maxK + 1, std::vector<Idx>(n));
  for (Idx x = 0; x < n; ++x) m[0][x] = c.zero;
  for (int k = 1; k <= maxK; ++k)
    for (Idx x = 0; x < n; ++x) {
      Idx prev = m[k - 1][x];
      m[k][x] = (prev == Carrier::kUndefined) ? Carrier::kUndefined
                                              : c.add[prev][x];
    }
  return m;
}

}  // namespace

Axiom axiomFromTag(const std::string& tag) {
  static const std::map<std::string, Axiom> table = {
      {"PC", Axiom::PC},   {"PD", Axiom::PD}, {"S0", Axiom::S0},
      {"WC", Axiom::WC},   {"PWC", Axiom::PWC}, {"O5", Axiom::O5},
      {"O6", Axiom::O6},   {"AU", Axiom::AU}, {"AD", Axiom::AD}};
  auto it = table.find(tag);
  if (it == table.end()) throw Error("BadAxiomTag", "unknown axiom tag " + tag);
  return it->second;
}

std::string axiomTag(Axiom a) {
  switch (a) {
    case Axiom::PC: return "PC";
    case Axiom::PD: return "PD";
    case Axiom::S0: return "S0";
    case Axiom::WC: return "WC";
    case Axiom::PWC: return "PWC";
    case Axiom::O5: return "O5";
    case Axiom::O6: return "O6";
    case Axiom::AU: return "AU";
    case Axiom::AD: return "AD";
  }
  return "?";
}

AxiomVerdict checkAxiom(const Carrier& c, Axiom axiom) {
  const int n = c.size();
  const Idx z = c.zero;
  AxiomVerdict v;
  v.axiom = axiom;
  bool skipped = false;

  auto fail = [&](std::vector<Idx> w, int mult = 0) {
    v.holds = false;
    v.witness = std::move(w);
    v.n = mult;
  };

  switch (axiom) {
    case Axiom::PC: {
      // t >= 0 and s <= t imply s+t >= 0.
      for (Idx s = 0; s < n && v.holds; ++s)
        for (Idx t = 0; t < n && v.holds; ++t) {
          if (!c.le(z, t) || !c.le(s, t)) continue;
          Idx st = c.add[s][t];
          if (st == Carrier::kUndefined) { skipped = true; continue; }
          if (!c.le(z, st)) fail({s, t});
        }
      break;
    }
    case Axiom::PD: {
      // For any s there exists p with s+p >= 0.
      for (Idx s = 0; s < n && v.holds; ++s) {
        bool found = false;
        bool anySkipped = false;
        for (Idx p = 0; p < n && !found; ++p) {
          Idx sp = c.add[s][p];
          if (sp == Carrier::kUndefined) { anySkipped = true; continue; }
          if (c.le(z, sp)) found = true;
        }
        if (!found) {
          fail({s});
          if (anySkipped) skipped = true;
        }
      }
      break;
    }
    case Axiom::S0: {
      for (Idx s = 0; s < n && v.holds; ++s)
        for (Idx t = 0; t < n && v.holds; ++t) {
          Idx st = c.add[s][t];
          if (st == Carrier::kUndefined) { skipped = true; continue; }
          if (st == z && (s != z || t != z)) fail({s, t});
        }
      break;
    }
    case Axiom::WC: {
      // s+t << v+t implies s << v.
      for (Idx s = 0; s < n && v.holds; ++s)
        for (Idx t = 0; t < n && v.holds; ++t) {
          Idx st = c.add[s][t];
          if (st == Carrier::kUndefined) { skipped = true; continue; }
          for (Idx w = 0; w < n && v.holds; ++w) {
            Idx wt = c.add[w][t];
            if (wt == Carrier::kUndefined) { skipped = true; continue; }
            if (c.wb(st, wt) && !c.wb(s, w)) fail({s, t, w});
          }
        }
      break;
    }
    case Axiom::PWC: {
      // s+t << t implies s << 0.
      for (Idx s = 0; s < n && v.holds; ++s)
        for (Idx t = 0; t < n && v.holds; ++t) {
          Idx st = c.add[s][t];
          if (st == Carrier::kUndefined) { skipped = true; continue; }
          if (c.wb(st, t) && !c.wb(s, z)) fail({s, t});
        }
      break;
    }
    case Axiom::O5: {
      // s <= t, s' << s: exists w with s'+w <= t <= s+w.
      for (Idx s = 0; s < n && v.holds; ++s)
        for (Idx t = 0; t < n && v.holds; ++t) {
          if (!c.le(s, t)) continue;
          for (Idx sp = 0; sp < n && v.holds; ++sp) {
            if (!c.wb(sp, s)) continue;
            bool found = false;
            bool anySkipped = false;
            for (Idx w = 0; w < n && !found; ++w) {
              Idx spw = c.add[sp][w];
              Idx sw = c.add[s][w];
              if (spw == Carrier::kUndefined || sw == Carrier::kUndefined) {
                anySkipped = true;
                continue;
              }
              if (c.le(spw, t) && c.le(t, sw)) found = true;
            }
            if (!found) {
              fail({s, t, sp});
              if (anySkipped) skipped = true;
            }
          }
        }
      break;
    }
    case Axiom::O6: {
      // x' << x <= y+z: exist s <= x,y and t <= x,z with x' <= s+t.
      for (Idx xp = 0; xp < n && v.holds; ++xp)
        for (Idx x = 0; x < n && v.holds; ++x) {
          if (!c.wb(xp, x)) continue;
          for (Idx y = 0; y < n && v.holds; ++y)
            for (Idx zz = 0; zz < n && v.holds; ++zz) {
              Idx yz = c.add[y][zz];
              if (yz == Carrier::kUndefined) { skipped = true; continue; }
              if (!c.le(x, yz)) continue;
              bool found = false;
              bool anySkipped = false;
              for (Idx s = 0; s < n && !found; ++s) {
                if (!c.le(s, x) || !c.le(s, y)) continue;
                for (Idx t = 0; t < n && !found; ++t) {
                  if (!c.le(t, x) || !c.le(t, zz)) continue;
                  Idx st = c.add[s][t];
                  if (st == Carrier::kUndefined) { anySkipped = true; continue; }
                  if (c.le(xp, st)) found = true;
                }
              }
              if (!found) {
                fail({xp, x, y, zz});
                if (anySkipped) skipped = true;
              }
            }
        }
      break;
    }
    case Axiom::AU: {
      // (n+1)x <= ny implies x <= y, n up to the carrier size: beyond that
      // the multiples cycle among at most |carrier| elements.
      auto mult = multiplesTable(c, n + 1);
      for (int k = 1; k <= n && v.holds; ++k)
        for (Idx x = 0; x < n && v.holds; ++x) {
          Idx lhs = mult[k + 1][x];
          if (lhs == Carrier::kUndefined) { skipped = true; continue; }
          for (Idx y = 0; y < n && v.holds; ++y) {
            Idx rhs = mult[k][y];
            if (rhs == Carrier::kUndefined) { skipped = true; continue; }
            if (c.le(lhs, rhs) && !c.le(x, y)) fail({x, y}, k);
          }
        }
      break;
    }
    case Axiom::AD: {
      // s' << s: for every k there exists w with kw <= s and s' <= (k+1)w.
      auto mult = multiplesTable(c, n + 1);
      for (Idx sp = 0; sp < n && v.holds; ++sp)
        for (Idx s = 0; s < n && v.holds; ++s) {
          if (!c.wb(sp, s)) continue;
          for (int k = 1; k <= n && v.holds; ++k) {
            bool found = false;
            bool anySkipped = false;
            for (Idx w = 0; w < n && !found; ++w) {
              Idx kw = mult[k][w];
              Idx k1w = mult[k + 1][w];
              if (kw == Carrier::kUndefined || k1w == Carrier::kUndefined) {
                anySkipped = true;
                continue;
              }
              if (c.le(kw, s) && c.le(sp, k1w)) found = true;
            }
            if (!found) {
              fail({sp, s}, k);
              if (anySkipped) skipped = true;
            }
          }
        }
      break;
    }
  }

  if (skipped || c.partial) {
    v.certified = false;
    if (v.holds) v.note = "holds on window";
  }
  if (!v.holds && !witnessViolates(c, axiom, v.witness, v.n))
    throw Error("Internal", "axiom failure witness does not re-check");
  return v;
}

bool witnessViolates(const Carrier& c, Axiom axiom,
                     const std::vector<Idx>& w, int mult) {
  const int n = c.size();
  const Idx z = c.zero;
  auto sum = [&](Idx a, Idx b) { return c.add[a][b]; };
  switch (axiom) {
    case Axiom::PC: {
      if (w.size() != 2) return false;
      Idx st = sum(w[0], w[1]);
      return c.le(z, w[1]) && c.le(w[0], w[1]) && st != Carrier::kUndefined &&
             !c.le(z, st);
    }
    case Axiom::PD: {
      if (w.size() != 1) return false;
      for (Idx p = 0; p < n; ++p) {
        Idx sp = sum(w[0], p);
        if (sp != Carrier::kUndefined && c.le(z, sp)) return false;
      }
      return true;
    }
    case Axiom::S0: {
      if (w.size() != 2) return false;
      Idx st = sum(w[0], w[1]);
      return st == z && (w[0] != z || w[1] != z);
    }
    case Axiom::WC: {
      if (w.size() != 3) return false;
      Idx st = sum(w[0], w[1]);
      Idx vt = sum(w[2], w[1]);
      return st != Carrier::kUndefined && vt != Carrier::kUndefined &&
             c.wb(st, vt) && !c.wb(w[0], w[2]);
    }
    case Axiom::PWC: {
      if (w.size() != 2) return false;
      Idx st = sum(w[0], w[1]);
      return st != Carrier::kUndefined && c.wb(st, w[1]) && !c.wb(w[0], z);
    }
    case Axiom::O5: {
      if (w.size() != 3) return false;
      Idx s = w[0], t = w[1], sp = w[2];
      if (!c.le(s, t) || !c.wb(sp, s)) return false;
      for (Idx ww = 0; ww < n; ++ww) {
        Idx spw = sum(sp, ww), sw = sum(s, ww);
        if (spw == Carrier::kUndefined || sw == Carrier::kUndefined) continue;
        if (c.le(spw, t) && c.le(t, sw)) return false;
      }
      return true;
    }
    case Axiom::O6: {
      if (w.size() != 4) return false;
      Idx xp = w[0], x = w[1], y = w[2], zz = w[3];
      Idx yz = sum(y, zz);
      if (!c.wb(xp, x) || yz == Carrier::kUndefined || !c.le(x, yz))
        return false;
      for (Idx s = 0; s < n; ++s) {
        if (!c.le(s, x) || !c.le(s, y)) continue;
        for (Idx t = 0; t < n; ++t) {
          if (!c.le(t, x) || !c.le(t, zz)) continue;
          Idx st = sum(s, t);
          if (st != Carrier::kUndefined && c.le(xp, st)) return false;
        }
      }
      return true;
    }
    case Axiom::AU: {
      if (w.size() != 2 || mult < 1) return false;
      auto lhs = c.multiple(mult + 1, w[0]);
      auto rhs = c.multiple(mult, w[1]);
      return lhs && rhs && c.le(*lhs, *rhs) && !c.le(w[0], w[1]);
    }
    case Axiom::AD: {
      if (w.size() != 2 || mult < 1) return false;
      Idx sp = w[0], s = w[1];
      if (!c.wb(sp, s)) return false;
      for (Idx ww = 0; ww < n; ++ww) {
        auto kw = c.multiple(mult, ww);
        auto k1w = c.multiple(mult + 1, ww);
        if (!kw || !k1w) continue;
        if (c.le(*kw, s) && c.le(sp, *k1w)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace cuweb
