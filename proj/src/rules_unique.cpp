#include <algorithm>

#include "rule_support.hpp"

namespace dsr::detail {

Outcome unique(RuleContext& cx) {
  const BoundState* S = cx.family_state();
  if (!S) return std::nullopt;
  const auto& p = cx.p();
  const int n = cx.n();
  const ClassSet all = cx.all(), B = cx.bad(), D = cx.dull(), G = cx.good();
  auto sg = [&](ClassSet x, ClassSet y) { return S->sigma(x, y); };
  auto tu = [&](ClassSet x, ClassSet y) { return S->tau(x, y); };
  const auto& us = cx.uniques();

  // U.1: v must miss a vertex of s and hit a vertex of t, also after
  // removing a neighbourly-complement set i that v avoids. Checked against
  // the good-target bounds only; consequences of the size and minimum-edge
  // bounds are credited to U.2-U.4.
  for (const auto& u : us) {
    const BoundState* S0 = cx.good_target_state();
    if (S0->contradiction()) break;
    auto sg = [&](ClassSet x, ClassSet y) { return S0->sigma(x, y); };
    auto tu = [&](ClassSet x, ClassSet y) { return S0->tau(x, y); };
    if (sg(u.v, u.s) >= cx.size(u.s) || tu(u.v, u.t) == 0)
      return cx.hit("U.1", {{"v", u.v}, {"s", u.s}, {"t", u.t}});
    if (auto h = find_subset(all - u.v, [&](ClassSet i) -> Outcome {
          if (!cx.mu(i) || tu(i, u.v) != 0) return std::nullopt;
          const ClassSet s = u.s - i, t = u.t - i;
          if (sg(u.v, s) >= cx.size(s) || tu(u.v, t) == 0)
            return cx.hit("U.1", {{"v", u.v}, {"i", i}, {"s", s}, {"t", t}});
          return std::nullopt;
        }))
      return h;
  }

  // U.2: the forced edge from v into i costs a stub on both sides of the
  // minimum-edge bound.
  for (const auto& u : us) {
    if (u.t.empty()) continue;
    const ClassSet rest = all - u.v;
    if (auto h = find_subset(rest, [&](ClassSet i) -> Outcome {
          if (!u.t.subset_of(i)) return std::nullopt;
          const int ni = cx.size(i), mi = cx.stubs(i);
          const ClassSet c = i & B;
          const int tcj_cap = cx.stubs(c) - std::max(1, sg(c, u.v));
          const int upper_cap = mi - std::max(1, sg(i, u.v));
          return find_subset(rest - i, [&](ClassSet j) -> Outcome {
            const int nj = cx.size(j);
            int lower = sg(i, j);
            if (!i.intersects(D)) {
              const ClassSet s = (all - i - j) - D;
              lower = std::max(lower, cx.chi(i, j) + nj + pos(nj * cx.size(s) - tu(s, j)));
            } else if (cx.mu(i)) {
              const int tcj = std::min(tu(c, j), tcj_cap);
              lower = std::max(lower, cx.chi(i, j) + cx.kappa(j, n - 1 - ni) +
                                          pos(cx.kappa(j, n - ni) - tcj));
            }
            if (lower > std::min(tu(i, j), upper_cap))
              return cx.hit("U.2", {{"v", u.v}, {"i", i}, {"j", j}});
            return std::nullopt;
          });
        }))
      return h;
  }

  // U.3: a d-neighbourly j of size d + 1 cannot be fully joined to its
  // complement.
  if (auto h = find_subset(all, [&](ClassSet j) -> Outcome {
        bool ok = false;
        j.for_each([&](int c) {
          const int d = p.degree_of(c);
          if (cx.size(j) == d + 1 && p.d_neighbourly(j, d)) ok = true;
        });
        if (!ok) return std::nullopt;
        return find_subset(all - j, [&](ClassSet i) -> Outcome {
          if (cx.chi(i, j) + 1 > tu(i, j)) return cx.hit("U.3", {{"i", i}, {"j", j}});
          return std::nullopt;
        });
      }))
    return h;

  // U.4: some vertex of s misses v, so j cannot be fully joined to V - i.
  for (const auto& u : us) {
    if (u.s.empty()) continue;
    const int dmin = p.min_degree(u.s);
    if (auto h = find_subset((all - u.v) - u.s, [&](ClassSet i) -> Outcome {
          if (dmin < n - cx.size(i)) return std::nullopt;
          const ClassSet free = (all - i) - u.s;
          for (std::uint64_t b = free.bits;; b = (b - 1) & free.bits) {
            const ClassSet j = u.s | ClassSet{b};
            if (cx.chi(i, j) + 1 > tu(i, j)) return cx.hit("U.4", {{"v", u.v}, {"i", i}, {"j", j}});
            if (b == 0) break;
          }
          return std::nullopt;
        }))
      return h;
  }

  // U.5: an i-neighbour of a good unique v needs an edge outside the good
  // part of the complement, beta_v and v.
  for (const auto& u : us) {
    if (!u.v.subset_of(G)) continue;
    if (auto h = find_subset(all - u.v, [&](ClassSet i) -> Outcome {
          const ClassSet ic = all - i;
          const ClassSet y = (ic & G) | (u.beta - i) | u.v;
          int siv = sg(i, u.v);
          if (!u.t.empty() && u.t.subset_of(i)) siv = std::max(siv, 1);
          if (sg(i, y) > cx.stubs(i) - siv) return cx.hit("U.5", {{"v", u.v}, {"i", i}});
          return std::nullopt;
        }))
      return h;
  }

  // U.6: j saturates its complement, and v's neighbour there is completable.
  for (const auto& u : us) {
    const int nj = u.degree + 1;
    const ClassSet bad_ok = cx.deg(nj);
    if (auto h = find_subset(all - u.v, [&](ClassSet extra) -> Outcome {
          const ClassSet j = extra | u.v;
          if (cx.size(j) != nj || !(j & B).subset_of(bad_ok)) return std::nullopt;
          const ClassSet i = all - j;
          if (i.empty() || cx.chi(i, j) < cx.stubs(i) - 2) return std::nullopt;
          return cx.hit("U.6", {{"v", u.v}, {"i", i}, {"j", j}});
        }))
      return h;
  }

  // U.7: v's bad neighbour in i needs a second bad neighbour in i.
  for (const auto& u : us) {
    if (!u.v.subset_of(G)) continue;
    if (!(B & cx.range(u.degree + 1, n)).subset_of(u.beta)) continue;
    const ClassSet i = B - u.beta, j = cx.range(u.degree + 1, n);
    if (i.empty() || j.empty()) continue;
    if (sg(i, j) >= cx.stubs(i) - 2) return cx.hit("U.7", {{"v", u.v}, {"i", i}, {"j", j}});
  }

  // U.8: too many stubs of s must land on v.
  for (const auto& u : us) {
    if (u.v.subset_of(D)) continue;
    const ClassSet s = D - u.alpha, i = (all - u.v) - D;
    if (s.empty()) continue;
    const int ns = cx.size(s), nD = cx.size(D);
    const int tsi = i.empty() ? 0 : std::min(tu(s, i), cx.stubs(i) - (s.intersects(B) ? 0 : cx.size(i)));
    const int tsD = std::min(tu(s, D), ns * (nD - 2));
    if (cx.stubs(s) - tsi - tsD >= ns) return cx.hit("U.8", {{"v", u.v}, {"s", s}, {"i", i}});
  }

  // U.9: every neighbour of a good dull v needs a bad edge outside beta_v.
  for (const auto& u : us) {
    if (!u.v.subset_of(G) || !u.v.subset_of(D) || u.degree < 3) continue;
    const ClassSet j = u.beta | u.v, i = cx.range(0, 2);
    if (cx.stubs(B) < cx.stubs(j) + 1) return cx.hit("U.9", {{"v", u.v}, {"j", j}});
    if (2 * u.degree > 2 * n - (cx.size(i) + 3 + (cx.mu(i) ? 1 : 0)))
      return cx.hit("U.9", {{"v", u.v}, {"i", i}});
  }

  // U.10: stubs of k spent on h, on v's k-neighbours and their k-partners,
  // and on the remaining neighbours of v. The split between the last two is
  // minimised over all feasible values.
  for (const auto& u : us) {
    if (!u.v.subset_of(G) || !u.v.subset_of(D)) continue;
    const ClassSet h = cx.range(u.degree + 1, n);
    if (h.intersects(D)) continue;
    const ClassSet k = B - h;
    if (k.empty()) continue;
    const ClassSet other = ((all - k) - h) - u.v;
    const ClassSet pend = cx.deg(1);
    int x_max = cx.size(other) - cx.size(other & pend);
    if (!k.intersects(D) && !u.s.empty() && u.s.subset_of(other) && !u.s.intersects(pend)) --x_max;
    const int skv = sg(k, u.v), nh = cx.size(h);
    int best = 1 << 29;
    for (int o = 0; o <= std::max(0, x_max); ++o) {
      const int e = std::max(skv, u.degree - nh - o);
      best = std::min(best, 2 * e + (e & 1) + o);
    }
    if (cx.stubs(k) < sg(k, h) + best) return cx.hit("U.10", {{"v", u.v}, {"k", k}, {"h", h}});
  }

  // U.11: the highest bad degree is unique with a good predecessor class.
  if (B.count() >= 2) {
    std::vector<int> bd;
    B.for_each([&](int c) { bd.push_back(p.degree_of(c)); });
    const int dv = bd.back(), du = bd[bd.size() - 2];
    const ClassSet v = cx.deg(dv), a = cx.deg(dv - 1);
    if (cx.size(v) == 1 && a.subset_of(G)) {
      const ClassSet i = cx.range(0, du), h = cx.range(dv - 1, n);
      if ((i | h) != all && cx.chi(i, h) >= cx.stubs(i) - 2)
        return cx.hit("U.11", {{"v", v}, {"i", i}, {"h", h}});
    }
  }

  // U.12: bad-stub count with the diagonal of alpha_v capped.
  const int mB = cx.stubs(B), nB = cx.size(B);
  for (const auto& u : us) {
    if (!u.v.subset_of(B) || u.alpha.empty() || !u.alpha.subset_of(G)) continue;
    const ClassSet j = u.alpha, g = G - j;
    const int nj = cx.size(j);
    const int tjj = std::min(tu(j, j), nj * (nj - 2) + mB - u.degree - 2);
    const int gslack = g.empty() ? 0 : cx.stubs(g) - cx.size(g);
    const int sBj = std::max(sg(B, j), cx.stubs(j) - (tjj + gslack));
    if (mB < sBj + n - nj + (nB & 1)) return cx.hit("U.12", {{"v", u.v}, {"j", j}, {"g", g}});
  }

  return std::nullopt;
}

Outcome pendants(RuleContext& cx) {
  const auto& p = cx.p();
  const int n = cx.n();
  const ClassSet B = cx.bad(), G = cx.good();
  const int k1 = cx.kappa(cx.all(), 1), k2 = cx.kappa(cx.all(), 2);

  // P.1: a high good vertex must touch a pendant or be completable.
  if (!G.empty() && p.max_degree(G) > n - 1 - k1 - (k2 == 0 ? 1 : 0))
    return cx.hit("P.1", {{"g", G}});

  // P.2: half the vertices are pendants and v sits at degree n/2. Needs
  // d_v >= 4 so that the pendants are not dull.
  if (n % 2 == 0 && 2 * k1 == n) {
    const int dv = n / 2;
    const ClassSet v = cx.deg(dv);
    if (dv >= 4 && cx.size(v) == 1 && cx.dull() == cx.range(dv - 2, dv - 1))
      return cx.hit("P.2", {{"v", v}});
  }

  std::vector<int> bd;
  B.for_each([&](int c) { bd.push_back(p.degree_of(c)); });

  // P.3: bad degrees 2, d+1, d+2 with unique 2, d, d+1. Degrees strictly
  // between 2 and d absorb neighbours of u and v that would otherwise meet in h.
  if (bd.size() == 3 && bd[0] == 2 && bd[2] == bd[1] + 1) {
    const int d = bd[1] - 1;
    if (d > 2 && k2 == 1 && cx.kappa(cx.all(), d) == 1 && cx.kappa(cx.all(), d + 1) == 1) {
      const int nmid = cx.size(cx.range(3, d - 1)), nh = cx.size(cx.range(d + 2, n));
      if (2 * d + 1 - k1 - 2 * nmid - nh > 1) return cx.hit("P.3", {{"u", cx.deg(d)}, {"v", cx.deg(d + 1)}});
    }
  }

  // P.4: bad degrees 2, 3, d+1 with unique 1, 2, d, d+1.
  if (bd.size() == 3 && bd[0] == 2 && bd[1] == 3) {
    const int d = bd[2] - 1;
    if (d >= 5 && d >= n - 3 && k1 == 1 && k2 == 1 && cx.kappa(cx.all(), d) == 1 &&
        cx.kappa(cx.all(), d + 1) == 1 && cx.kappa(cx.all(), 3) > 0)
      return cx.hit("P.4", {{"u", cx.deg(d)}, {"v", cx.deg(d + 1)}});
  }
  return std::nullopt;
}

}  // namespace dsr::detail
