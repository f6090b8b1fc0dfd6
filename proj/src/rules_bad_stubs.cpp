#include <algorithm>

#include "rule_support.hpp"

namespace dsr::detail {

namespace {

/// Sum over the vertices of x of f(degree).
template <class F>
int per_vertex(const SequenceProfile& p, ClassSet x, F f) {
  int total = 0;
  x.for_each([&](int c) { total += p.cls(c).count * f(p.degree_of(c)); });
  return total;
}

}  // namespace

Outcome bad_stubs(RuleContext& cx) {
  const BoundState* S = cx.family_state();
  if (!S) return std::nullopt;
  const auto& p = cx.p();
  const int n = cx.n();
  const ClassSet all = cx.all(), B = cx.bad(), D = cx.dull(), G = cx.good();
  if (B.empty()) return std::nullopt;
  const int mB = cx.stubs(B), nB = cx.size(B), dB = nB & 1;
  auto sg = [&](ClassSet x, ClassSet y) { return sigma_lb(p, *S, x, y); };
  auto tu = [&](ClassSet x, ClassSet y) { return tau_cap(p, *S, x, y); };
  auto good_slack = [&](ClassSet x) { return cx.stubs(x) - cx.size(x); };

  // BS.1: bad stubs spent on a good set j plus one bad edge per vertex outside j.
  if (auto h = find_subset(G, [&](ClassSet j) -> Outcome {
        if (mB < sg(B, j) + n - cx.size(j) + dB) return cx.hit("BS.1", {{"B", B}, {"j", j}});
        return std::nullopt;
      }))
    return h;

  // BS.2: as BS.1 but counting B-internal stubs via a split B = c + k.
  {
    int sBB = sg(B, B);
    for_subsets(B, [&](ClassSet c) {
      const ClassSet k = B - c;
      if (k.empty()) return;
      const int sck = sg(c, k);
      sBB = std::max(sBB, 2 * sck + pos(cx.size(c) - sck));
    });
    if (auto h = find_subset(G, [&](ClassSet j) -> Outcome {
          int sBj = sg(B, j);
          for_subsets(G - j, [&](ClassSet g) { sBj = std::max(sBj, sg(g | B, j) - good_slack(g)); });
          if (mB < sBj + sBB + n - cx.size(j) - nB) return cx.hit("BS.2", {{"B", B}, {"j", j}});
          return std::nullopt;
        }))
      return h;
  }

  // BS.3: D and B disjoint; the rest splits into low g and high j.
  if (!D.intersects(B)) {
    const ClassSet R = (all - D) - B;
    const int nD = cx.size(D), mD = cx.stubs(D);
    for (std::uint64_t gb = R.bits;; gb = (gb - 1) & R.bits) {
      const ClassSet g{gb}, j = R - g;
      const int ng = cx.size(g), nj = cx.size(j), mj = cx.stubs(j);
      const int tDj = std::min(tu(D, j), per_vertex(p, j, [&](int d) { return std::min(d, nD - 1); }));
      const int tgj = g.empty() ? 0 : std::min(tu(g, j), good_slack(g));
      const int tgD = g.empty() ? 0 : std::min(tu(g, D), good_slack(g));
      const int sBj = std::max(sg(B, j), mj - nj * (nj - 1) - tDj - tgj);
      const int sDB = std::max(sg(D, B), mD - nD * (nD - 2) - tDj - tgD);
      if (mB < nB + dB + sDB + sBj + ng)
        return cx.hit("BS.3", {{"g", g}, {"D", D}, {"B", B}, {"j", j}});
      if (gb == 0) break;
    }
  }

  // BS.4: five degrees alternating good, bad, good, bad, good.
  if (p.num_classes() == 5 && B == ClassSet{0b01010}) {
    const ClassSet g = ClassSet::single(0), c = ClassSet::single(1), pp = ClassSet::single(2),
                   k = ClassSet::single(3), h = ClassSet::single(4), i = g | c;
    const int np = cx.size(pp), nk = cx.size(k), nh = cx.size(h);
    const int sch = std::max(sg(c, h), cx.chi(i, h) - good_slack(g));
    const int tip = std::min(tu(i, pp), good_slack(i) - sg(i, h));
    int tpp = std::min(tu(pp, pp), np * (np - 2) + tip);
    tpp -= tpp & 1;
    const int spk = std::max(sg(pp, k), cx.stubs(pp) - (tip + tpp + np * nh));
    const int sck = std::max(sg(c, k), spk - nk * (np - 1));
    if (cx.stubs(c) < sch + sck)
      return cx.hit("BS.4", {{"g", g}, {"c", c}, {"p", pp}, {"k", k}, {"h", h}});
  }

  // BS.5: vertices of j adjacent to all of a neighbourly complement need a
  // bad edge into i on top of their n_k bad edges.
  if (auto h = find_subset(G, [&](ClassSet j) -> Outcome {
        const int nj = cx.size(j);
        return find_subset(all - j, [&](ClassSet i) -> Outcome {
          if (!cx.mu(i)) return std::nullopt;
          const ClassSet k = cx.comp(i) & B;
          const int full = pos(nj - tu(i, j) + cx.chi(i, j));
          if (mB < n + dB + full * cx.size(k)) return cx.hit("BS.5", {{"i", i}, {"j", j}, {"k", k}});
          return std::nullopt;
        });
      }))
    return h;

  return std::nullopt;
}

}  // namespace dsr::detail
