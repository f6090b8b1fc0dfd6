#include <algorithm>

#include "rule_support.hpp"

namespace dsr::detail {

namespace {

/// Sets for which the stubs of i are exactly used up by the minimum number
/// of edges from the high vertices (every vertex above xi_i adjacent to all
/// of V - i, every vertex at xi_i with one edge to i).
struct Saturated {
  ClassSet i, h, s, c, g;
  int xi = 0;
};

std::optional<Saturated> saturated(const RuleContext& cx, ClassSet i) {
  if (i.empty() || i == cx.all()) return std::nullopt;
  const auto& p = cx.p();
  const int xi = cx.xi(i);
  if (p.max_degree(i) >= xi || !cx.mu(i)) return std::nullopt;
  Saturated r;
  r.i = i;
  r.xi = xi;
  r.h = cx.range(xi + 1, cx.n());
  r.s = cx.deg(xi);
  r.c = i & cx.bad();
  r.g = i - r.c;
  if (cx.chi(i, r.h) + cx.kappa(cx.comp(i), xi) != cx.stubs(i)) return std::nullopt;
  return r;
}

/// Lower bound on the c-h stubs under saturation: each h-vertex needs a bad
/// neighbour in i, and high h-vertices need more.
int sigma_ch(const RuleContext& cx, const BoundState& S, const Saturated& r) {
  const auto& p = cx.p();
  const int n = cx.n(), nc = cx.size(r.c), dD = r.c.intersects(cx.dull()) ? 1 : 0;
  int v = cx.size(r.h);
  r.h.for_each([&](int k) { v += p.cls(k).count * pos(p.degree_of(k) - n + nc + 1 - dD); });
  return std::max(v, S.sigma(r.c, r.h));
}

/// Unique vertices u, v with exactly three bad degrees: u good, v bad,
/// both dull, d_v != d_u + 1.
template <class F>
Outcome for_uv_pairs(RuleContext& cx, F f) {
  if (cx.bad().count() != 3) return std::nullopt;
  const ClassSet B = cx.bad(), D = cx.dull();
  for (const auto& u : cx.uniques()) {
    if (u.v.intersects(B) || !u.v.subset_of(D)) continue;
    for (const auto& v : cx.uniques()) {
      if (!v.v.subset_of(B) || !v.v.subset_of(D) || v.degree == u.degree + 1) continue;
      if (auto h = f(u, v)) return h;
    }
  }
  return std::nullopt;
}

/// Unique u, v, w with exactly three bad degrees: d_v = d_u + 1, u good,
/// v dull, w bad and not dull.
template <class F>
Outcome for_uvw_triples(RuleContext& cx, F f) {
  if (cx.bad().count() != 3) return std::nullopt;
  const ClassSet B = cx.bad(), D = cx.dull();
  const auto& us = cx.uniques();
  for (const auto& u : us) {
    if (u.v.intersects(B)) continue;
    for (const auto& v : us) {
      if (v.degree != u.degree + 1 || !v.v.subset_of(D)) continue;
      for (const auto& w : us) {
        if (!w.v.subset_of(B) || w.v.intersects(D) || w.v == v.v) continue;
        if (auto h = f(u, v, w)) return h;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Outcome sigma_tau(RuleContext& cx) {
  const BoundState* S = cx.family_state();
  if (!S) return std::nullopt;
  const auto& p = cx.p();
  const int n = cx.n();
  const ClassSet all = cx.all(), B = cx.bad(), D = cx.dull(), G = cx.good();
  auto sg = [&](ClassSet x, ClassSet y) { return S->sigma(x, y); };
  auto tu = [&](ClassSet x, ClassSet y) { return S->tau(x, y); };

  // ST.1: all of i's edges leave i, so no i-vertex may see all of p.
  if (auto h = find_subset(all, [&](ClassSet i) -> Outcome {
        if (i == all || !cx.mu(i) || sg(i, cx.comp(i)) < cx.stubs(i)) return std::nullopt;
        const ClassSet pp = cx.comp(i) & D;
        if (pp.empty()) return std::nullopt;
        const int np = cx.size(pp);
        int cap = 0;
        i.for_each([&](int c) { cap += p.cls(c).count * std::min(p.degree_of(c), np - 1); });
        if (sg(i, pp) > std::min(tu(i, pp), cap)) return cx.hit("ST.1", {{"i", i}, {"p", pp}});
        return std::nullopt;
      }))
    return h;

  // ST.2: when i is saturated by j, the good part of i only meets s.
  if (auto h = find_subset(all, [&](ClassSet i) -> Outcome {
        if (i == all || !cx.mu(i)) return std::nullopt;
        const ClassSet g = i - B;
        if (g.empty()) return std::nullopt;
        return find_subset(all - i, [&](ClassSet j) -> Outcome {
          if (cx.chi(i, j) != cx.stubs(i)) return std::nullopt;
          const ClassSet s = j - cx.deg(n - cx.size(i));
          if (tu(g, s) < cx.stubs(g)) return cx.hit("ST.2", {{"i", i}, {"j", j}, {"g", g}, {"s", s}});
          return std::nullopt;
        });
      }))
    return h;

  // ST.3: under saturation, c cannot feed both h and s.
  if (auto h = find_subset(all, [&](ClassSet i) -> Outcome {
        auto r = saturated(cx, i);
        if (!r) return std::nullopt;
        const int ng = cx.size(r->g), mg = cx.stubs(r->g);
        const int need = sigma_ch(cx, *S, *r) + cx.size(r->s) - mg + (r->s.intersects(B) ? 0 : ng);
        if (cx.stubs(r->c) < need) return cx.hit("ST.3", {{"i", i}, {"h", r->h}, {"s", r->s}});
        return std::nullopt;
      }))
    return h;

  // ST.4: under saturation, q is joined to all of p and its xi-vertices
  // end up completable.
  if (auto h = find_subset(all, [&](ClassSet i) -> Outcome {
        auto r = saturated(cx, i);
        if (!r) return std::nullopt;
        const ClassSet ic = cx.comp(i), pp = ic & D, q = ic - pp;
        if (pp.empty() || pp != (pp & cx.deg(r->xi - 1))) return std::nullopt;
        const ClassSet qb = q & B;
        if (qb.empty() || qb != cx.deg(r->xi)) return std::nullopt;
        return cx.hit("ST.4", {{"i", i}, {"p", pp}, {"q", q}});
      }))
    return h;

  // ST.5: the good part of i is saturated by s but no s-vertex may see all of it.
  if (auto h = find_subset(all, [&](ClassSet i) -> Outcome {
        if (i == all || !cx.mu(i) || (i & B).intersects(D)) return std::nullopt;
        const ClassSet g = i - B;
        if (g.empty()) return std::nullopt;
        const int xi = cx.xi(i);
        return find_subset(all - i, [&](ClassSet j) -> Outcome {
          if (p.min_degree(j) < xi || cx.chi(i, j) != cx.stubs(i)) return std::nullopt;
          const ClassSet s = j - cx.deg(n - cx.size(i));
          if (cx.stubs(g) > cx.size(s) * (cx.size(g) - 1))
            return cx.hit("ST.5", {{"i", i}, {"j", j}, {"g", g}, {"s", s}});
          return std::nullopt;
        });
      }))
    return h;

  // ST.6: q-vertices seeing all of p need an edge to c, capping p's internal room.
  if (auto h = find_subset(all, [&](ClassSet i) -> Outcome {
        if (i == all || !cx.mu(i)) return std::nullopt;
        const ClassSet ic = cx.comp(i), c = i & B, pp = ic & D, q = ic - pp;
        const int np = cx.size(pp), nq = cx.size(q), mc = cx.stubs(c);
        if (q.empty() || nq < mc || sg(i, q) < cx.stubs(i)) return std::nullopt;
        if (np * (np + nq - 2) < cx.stubs(pp) + nq - mc)
          return cx.hit("ST.6", {{"i", i}, {"p", pp}, {"q", q}});
        return std::nullopt;
      }))
    return h;

  // ST.7 and ST.8: i keeps exactly one stub per vertex after edges to good j.
  if (auto h = find_subset(G, [&](ClassSet j) -> Outcome {
        const int nj = cx.size(j);
        const ClassSet k = cx.deg(p.max_degree(j) + 1);
        return find_subset(all - j, [&](ClassSet i) -> Outcome {
          if (sg(i, j) < cx.stubs(i) - cx.size(i)) return std::nullopt;
          if (!k.empty() && !k.intersects(i) && cx.chi(i, k) > cx.size(i) - cx.kappa(i, nj + 1))
            return cx.hit("ST.7", {{"i", i}, {"j", j}, {"k", k}});
          // A vertex of degree n_j + 1 in i sees all of j, so an edge to k
          // makes it completable. (Degree n_j would leave one j-vertex unseen.)
          const ClassSet s = cx.deg(nj + 1);
          if (!k.empty() && !s.empty() && s.subset_of(i) && sg(s, k) > 0)
            return cx.hit("ST.8", {{"i", i}, {"j", j}, {"s", s}, {"k", k}});
          return std::nullopt;
        });
      }))
    return h;

  return std::nullopt;
}

Outcome sigma_tau_unique(RuleContext& cx) {
  const BoundState* S = cx.family_state();
  if (!S) return std::nullopt;
  const auto& p = cx.p();
  const int n = cx.n();
  const ClassSet all = cx.all(), B = cx.bad(), D = cx.dull(), G = cx.good();
  auto sg = [&](ClassSet x, ClassSet y) { return S->sigma(x, y); };

  // STU.1: v at degree xi_i must have an i-neighbour, which leaves i one stub short.
  for (const auto& u : cx.uniques()) {
    if (!u.v.subset_of(G)) continue;
    const ClassSet j = cx.range(u.degree, n);
    if (!(B & cx.range(u.degree + 1, n)).subset_of(u.beta)) continue;
    const int ni = n - 1 - u.degree;
    if (auto h = find_subset(all - j, [&](ClassSet i) -> Outcome {
          if (cx.size(i) != ni || !cx.mu(i) || sg(i, j) < cx.stubs(i)) return std::nullopt;
          return cx.hit("STU.1", {{"v", u.v}, {"i", i}, {"j", j}});
        }))
      return h;
  }

  // STU.2 and STU.3: saturation with a single vertex at xi_i.
  if (auto h = find_subset(all, [&](ClassSet i) -> Outcome {
        auto r = saturated(cx, i);
        if (!r || cx.size(r->s) != 1) return std::nullopt;
        const int sch = sigma_ch(cx, *S, *r), mc = cx.stubs(r->c);
        // The rest of V - i has degree n_h and is used up by h, so v's last
        // neighbour lies in i.
        const ClassSet rest = (cx.comp(i) - r->h) - r->s;
        if (mc < sch + 1 && rest.subset_of(cx.deg(cx.size(r->h)))) return cx.hit("STU.2", {{"i", i}, {"h", r->h}, {"v", r->s}});
        const ClassSet ic = cx.comp(i);
        if (cx.kappa(ic, r->xi - 1) == 1 && sch >= mc && (ic & B & cx.range(0, r->xi - 2)).empty())
          return cx.hit("STU.3", {{"i", i}, {"h", r->h}, {"v", r->s}, {"u", cx.deg(r->xi - 1)}});
        return std::nullopt;
      }))
    return h;

  // STU.4: j fills i, so a good unique v outside both fails the restricted
  // miss condition.
  if (auto h = find_subset(G, [&](ClassSet j) -> Outcome {
        return find_subset(all - j, [&](ClassSet i) -> Outcome {
          if (!cx.mu(i) || cx.chi(i, j) != cx.stubs(i) - cx.size(i)) return std::nullopt;
          for (const auto& u : cx.uniques()) {
            if (!u.v.subset_of(G) || u.v.intersects(i | j)) continue;
            if (((D - u.v) - i).subset_of(j)) return cx.hit("STU.4", {{"v", u.v}, {"i", i}, {"j", j}});
          }
          return std::nullopt;
        });
      }))
    return h;

  // STU.5: a unique minimum-degree u next to low vertices and a good class j
  // at degree n - 2 - n_i.
  {
    const int dmin = p.degree_of(0);
    const ClassSet i = cx.range(0, dmin + 1);
    const int dj = n - 2 - cx.size(i);
    const ClassSet j = cx.deg(dj);
    std::vector<int> bd;
    B.for_each([&](int c) { bd.push_back(p.degree_of(c)); });
    const bool two = bd == std::vector<int>{dmin + 1, dj + 1};
    const bool three = bd == std::vector<int>{dmin + 1, dj + 1, dj + 2} && cx.size(cx.deg(dj + 1)) == 1 &&
                       cx.size(cx.deg(dj + 2)) == 1;
    if (dj != dmin && !j.empty() && j.subset_of(G) && !j.intersects(i) && cx.size(cx.deg(dmin)) == 1 &&
        (two || three)) {
      const ClassSet s = cx.range(dj + 1, n) - B;
      if (sg(i, s) >= cx.stubs(i) - cx.size(i))
        return cx.hit("STU.5", {{"u", cx.deg(dmin)}, {"i", i}, {"j", j}, {"s", s}});
    }
  }

  // STU.6: every vertex of c is joined to all of j, so v's neighbour in c is
  // completable.
  if (auto h = find_subset(G, [&](ClassSet j) -> Outcome {
        const int nj = cx.size(j), dv = p.max_degree(j) + 1;
        const ClassSet v = cx.deg(dv);
        if (cx.size(v) != 1) return std::nullopt;
        return find_subset(all - j - v, [&](ClassSet i) -> Outcome {
          const ClassSet c = i & B;
          if (c.empty() || p.min_degree(c) <= nj) return std::nullopt;
          if (cx.chi(i, j) != cx.stubs(i) - cx.size(i)) return std::nullopt;
          if (!(cx.comp(i) & B).subset_of(cx.range(dv, dv + 1))) return std::nullopt;
          return cx.hit("STU.6", {{"v", v}, {"i", i}, {"j", j}});
        });
      }))
    return h;

  // STU.7: two unique dull vertices two degrees apart at xi_i.
  if (auto h = for_uv_pairs(cx, [&](const UniqueVertexContext& u, const UniqueVertexContext& v) -> Outcome {
        if (u.degree + 2 != v.degree) return std::nullopt;
        const int ni = n - 1 - v.degree;
        const ClassSet j = cx.range(v.degree, n);
        return find_subset((all - D) - j, [&](ClassSet i) -> Outcome {
          if (cx.size(i) != ni || cx.chi(i, j) + cx.size(j) != cx.stubs(i)) return std::nullopt;
          return cx.hit("STU.7", {{"u", u.v}, {"v", v.v}, {"i", i}, {"j", j}});
        });
      }))
    return h;

  // STU.8: v has no edge to i and so has closed neighbourhood j + v.
  if (auto h = for_uvw_triples(
          cx, [&](const UniqueVertexContext& u, const UniqueVertexContext& v, const UniqueVertexContext& w) -> Outcome {
            if (w.degree <= v.degree) return std::nullopt;
            const int ni = n - 2 - v.degree;
            const ClassSet j = cx.range(v.degree + 1, n);
            return find_subset(((all - j) - u.v) - v.v - w.v, [&](ClassSet i) -> Outcome {
              if (cx.size(i) != ni || cx.chi(i, j) + cx.size(j) != cx.stubs(i)) return std::nullopt;
              // N(v) is the complement of i minus u and v; it must be exactly j.
              if (cx.comp(i) != (j | u.v | v.v)) return std::nullopt;
              return cx.hit("STU.8", {{"u", u.v}, {"v", v.v}, {"w", w.v}, {"i", i}, {"j", j}});
            });
          }))
    return h;

  // STU.9: every last stub of i goes to a bad vertex, leaving u only w.
  if (auto h = for_uvw_triples(
          cx, [&](const UniqueVertexContext& u, const UniqueVertexContext&, const UniqueVertexContext& w) -> Outcome {
            const ClassSet j = w.alpha;
            if (j.empty() || !j.subset_of(G)) return std::nullopt;
            const ClassSet core = (B - w.v) | u.v;
            if (core.intersects(j)) return std::nullopt;
            const ClassSet free = ((all - j) - w.v) - core;
            for (std::uint64_t b = free.bits;; b = (b - 1) & free.bits) {
              const ClassSet i = core | ClassSet{b};
              if (sg(i, j) >= cx.stubs(i) - cx.size(i))
                return cx.hit("STU.9", {{"u", u.v}, {"w", w.v}, {"i", i}, {"j", j}});
              if (b == 0) break;
            }
            return std::nullopt;
          }))
    return h;

  return std::nullopt;
}

Outcome sigma_tau_unique_bad(RuleContext& cx) {
  const BoundState* S = cx.family_state();
  if (!S) return std::nullopt;
  const auto& p = cx.p();
  const int n = cx.n();
  const ClassSet all = cx.all(), B = cx.bad(), D = cx.dull(), G = cx.good();
  const int mB = cx.stubs(B), nB = cx.size(B), dB = nB & 1;
  auto sg = [&](ClassSet x, ClassSet y) { return S->sigma(x, y); };

  // STUB.1: the two dull vertices at xi_i cannot both avoid v, and the one
  // seeing all of D has no bad stub left in i.
  if (auto h = find_subset(all, [&](ClassSet i) -> Outcome {
        if (i == all || !cx.mu(i)) return std::nullopt;
        const int xi = cx.xi(i);
        const ClassSet j = cx.range(xi, n);
        if (j.empty() || j.intersects(i) || sg(i, j) < cx.stubs(i)) return std::nullopt;
        const ClassSet ic = cx.comp(i);
        if (cx.kappa(all, xi - 1) != 1 || cx.kappa(j, xi) != 2) return std::nullopt;
        if (cx.kappa(j, xi + 1) < cx.stubs(i & B)) return std::nullopt;
        if (!(ic & D).subset_of(cx.range(xi - 1, xi))) return std::nullopt;
        return cx.hit("STUB.1", {{"i", i}, {"j", j}});
      }))
    return h;

  // STUB.2: the unique vertex at xi_i has no admissible bad neighbour.
  if (auto h = find_subset(all, [&](ClassSet i) -> Outcome {
        auto r = saturated(cx, i);
        if (!r || cx.kappa(all, r->xi) != 1) return std::nullopt;
        if (sigma_ch(cx, *S, *r) < cx.stubs(r->c)) return std::nullopt;
        const ClassSet low = cx.comp(i) & B & cx.range(0, r->xi - 1);
        if (low.empty() || (low == cx.deg(r->xi - 1) && cx.size(low) == 1))
          return cx.hit("STUB.2", {{"i", i}, {"h", r->h}, {"v", r->s}});
        return std::nullopt;
      }))
    return h;

  // STUB.3: with the bad-stub bound tight, every j-vertex also needs an edge
  // to k, which k cannot afford.
  if (B.count() == 2) {
    const int dv = p.max_degree(B);
    const ClassSet v = cx.deg(dv), k = B - v, alpha = cx.deg(dv - 1);
    if (cx.size(v) == 1) {
      for (int c = 0; c < p.num_classes(); ++c) {
        const ClassSet j = G & cx.range(p.degree_of(c) + 1, n);
        if (j.empty() || !alpha.subset_of(j)) continue;
        if (c > 0 && j == (G & cx.range(p.degree_of(c - 1) + 1, n))) continue;
        const ClassSet g = G - j;
        const int nj = cx.size(j);
        const int sBj = cx.stubs(j) - nj * (nj - 1) - (cx.stubs(g) - cx.size(g));
        if (mB > sBj + n - nj + dB) continue;
        int need = 1;
        j.for_each([&](int q) { need += p.cls(q).count * std::max(1, p.degree_of(q) + 1 + nB - n); });
        if (need > cx.stubs(k) - cx.size(k)) return cx.hit("STUB.3", {{"v", v}, {"k", k}, {"j", j}, {"g", g}});
      }
    }
  }

  // STUB.4: a dull bad u forces v's edges, and alpha_v then needs too many
  // bad stubs.
  if (B.count() == 3) {
    for (const auto& u : cx.uniques()) {
      if (!u.v.subset_of(B) || !u.v.subset_of(D)) continue;
      if ((G & cx.range(u.degree + 1, n)).count() != 1) continue;
      for (const auto& v : cx.uniques()) {
        if (!v.v.subset_of(B) || v.degree < u.degree + 4) continue;
        const ClassSet j = v.alpha, g = cx.range(0, u.degree - 1);
        const int nj = cx.size(j);
        const int gslack = cx.stubs(g) - cx.size(g);
        if (mB < v.degree + nj + 2 + dB && gslack <= v.degree - nj && v.degree >= nj + 2)
          return cx.hit("STUB.4", {{"u", u.v}, {"v", v.v}, {"j", j}, {"g", g}});
      }
    }
  }

  return std::nullopt;
}

}  // namespace dsr::detail
