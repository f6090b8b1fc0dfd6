#include "dsr/rules.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "dsr/error.hpp"
#include "rule_support.hpp"

namespace dsr {

std::vector<UniqueVertexContext> UniqueVertexContext::all(const SequenceProfile& p) {
  std::vector<UniqueVertexContext> out;
  for (int c = 0; c < p.num_classes(); ++c) {
    if (!p.is_unique_class(c)) continue;
    UniqueVertexContext u;
    u.degree = p.degree_of(c);
    u.v = ClassSet::single(c);
    u.alpha = p.of_degree(u.degree - 1);
    u.beta = p.of_degree(u.degree + 1);
    u.s = (p.dull() - u.v) - u.alpha;
    u.t = (p.bad() - u.v) - u.beta;
    out.push_back(u);
  }
  return out;
}

BoundState propagate(BoundState bs) {
  bs.propagate();
  return bs;
}

namespace detail {

std::optional<int> min_edge_formula(const SequenceProfile& p, ClassSet i, ClassSet j,
                                    const std::function<int(ClassSet, ClassSet)>& tau) {
  const ClassSet all = p.all(), dull = p.dull();
  const int n = p.n(), ni = p.size(i), nj = p.size(j);
  int value = p.chi(i, j);
  if (!i.intersects(dull)) {
    // Each vertex of j misses a dull vertex, plus every j-s non-edge.
    const ClassSet s = ((all - i) - j) - dull;
    return value + nj + pos(nj * p.size(s) - (s.empty() ? 0 : tau(s, j)));
  }
  if (!p.neighbourly(all - i)) return std::nullopt;
  // A j-vertex of degree xi_i missing nothing would have the neighbourly
  // closed neighbourhood V - i; one of degree n - n_i needs a bad i-neighbour.
  const ClassSet c = i & p.bad();
  return value + p.kappa(j, n - 1 - ni) + pos(p.kappa(j, n - ni) - (c.empty() ? 0 : tau(c, j)));
}

bool seed_min_edges(BoundState& bs) {
  const SequenceProfile& p = bs.profile();
  const ClassSet all = p.all();
  auto tau = [&](ClassSet x, ClassSet y) { return bs.tau(x, y); };
  bool changed = false;
  for_subsets(all, [&](ClassSet i) {
    if (i == all) return;
    for_subsets(all - i, [&](ClassSet j) {
      if (auto v = min_edge_formula(p, i, j, tau)) changed |= bs.raise_sigma(i, j, *v);
    });
  });
  return changed;
}

int tau_cap(const SequenceProfile& p, const BoundState& S, ClassSet x, ClassSet y) {
  int v = S.tau(x, y);
  if (x.empty() || y.empty()) return v;
  if (y.subset_of(p.good())) v = std::min(v, p.stubs(x) - p.size(x));
  if (!x.intersects(y) && p.neighbourly(y)) v = std::min(v, p.stubs(x) - p.kappa(x, p.size(y)));
  return v;
}

int sigma_lb(const SequenceProfile& p, const BoundState& S, ClassSet i, ClassSet j) {
  int v = S.sigma(i, j);
  if (i.empty() || j.empty() || i.intersects(j)) return v;
  auto tau = [&](ClassSet x, ClassSet y) { return tau_cap(p, S, x, y); };
  if (auto f = min_edge_formula(p, i, j, tau)) v = std::max(v, *f);
  return v;
}

void seed_static(BoundState& bs, SeedSet seeds) {
  const SequenceProfile& p = bs.profile();
  const ClassSet all = p.all(), good = p.good();
  for_subsets(all, [&](ClassSet i) {
    const int mi = p.stubs(i), ni = p.size(i);
    // Every vertex needs a bad neighbour.
    if (!good.empty()) bs.lower_tau(i, good, mi - ni);
    if (seeds == SeedSet::Full && p.neighbourly(i)) {
      // A vertex of degree n_i - 1 with every edge inside neighbourly i.
      bs.lower_tau(i, i, mi - p.kappa(i, ni - 1));
    }
    if (i == all) return;
    for_subsets(all - i, [&](ClassSet j) {
      if (!p.neighbourly(j)) return;
      const int nj = p.size(j);
      bs.lower_tau(i, j, mi - p.kappa(i, nj));
      if (seeds == SeedSet::Full) {
        const ClassSet s = (all - i) - j;
        bs.raise_sigma(i, j, p.chi(i, j) + p.kappa(s, nj) + p.kappa(j, nj - 1));
      }
    });
  });
}

}  // namespace detail

BoundState hypothesis_state(const SequenceProfile& p, SeedSet seeds) {
  BoundState bs(p);
  detail::seed_static(bs, seeds);
  while (!bs.contradiction()) {
    bs.propagate();
    if (bs.contradiction() || !detail::seed_min_edges(bs)) break;
  }
  return bs;
}

namespace detail {

const BoundState* RuleContext::state() {
  if (!state_tried_) {
    state_tried_ = true;
    if (profile_.num_classes() <= BoundState::kMaxClasses)
      state_.emplace(hypothesis_state(profile_, SeedSet::Full));
  }
  return state_ ? &*state_ : nullptr;
}

const BoundState* RuleContext::static_state() {
  if (!static_tried_) {
    static_tried_ = true;
    if (profile_.num_classes() <= BoundState::kMaxClasses) {
      BoundState bs(profile_);
      seed_static(bs, SeedSet::Restricted);
      static_state_.emplace(propagate(std::move(bs)));
    }
  }
  return static_state_ ? &*static_state_ : nullptr;
}

const BoundState* RuleContext::good_target_state() {
  if (!good_target_tried_) {
    good_target_tried_ = true;
    if (profile_.num_classes() <= BoundState::kMaxClasses) {
      BoundState bs(profile_);
      const ClassSet good = profile_.good();
      if (!good.empty())
        for_subsets(profile_.all(), [&](ClassSet i) { bs.lower_tau(i, good, profile_.stubs(i) - profile_.size(i)); });
      good_target_state_.emplace(propagate(std::move(bs)));
    }
  }
  return good_target_state_ ? &*good_target_state_ : nullptr;
}

const BoundState* RuleContext::family_state() {
  if (!family_tried_) {
    family_tried_ = true;
    if (profile_.num_classes() <= BoundState::kMaxClasses) {
      family_state_.emplace(hypothesis_state(profile_, SeedSet::Restricted));
      if (family_state_->contradiction()) family_state_.emplace(*static_state());
      if (family_state_->contradiction()) family_state_.emplace(propagate(BoundState(profile_)));
    }
  }
  return family_state_ ? &*family_state_ : nullptr;
}

const std::vector<UniqueVertexContext>& RuleContext::uniques() {
  if (!uniques_) uniques_ = UniqueVertexContext::all(profile_);
  return *uniques_;
}

Hit RuleContext::hit(std::string id,
                     std::initializer_list<std::pair<const char*, ClassSet>> roles) const {
  Hit h{std::move(id), {}};
  for (const auto& [name, set] : roles) {
    std::vector<int> degs;
    set.for_each([&](int c) {
      for (int k = 0; k < profile_.cls(c).count; ++k) degs.push_back(profile_.degree_of(c));
    });
    h.roles.emplace(name, std::move(degs));
  }
  return h;
}

namespace {

bool good_after_removing_one(const std::vector<int>& degs, std::size_t skip) {
  int prev = -2;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    if (i == skip) continue;
    if (degs[i] == prev + 1) return false;
    prev = degs[i];
  }
  return true;
}

}  // namespace

Outcome easy(RuleContext& cx) {
  const auto& p = cx.p();
  const auto& seq = p.sequence();
  const int n = cx.n();
  if (all_degrees_good(seq)) return cx.hit("L1.3");
  if (seq.contains(0)) return cx.hit("L1.1", {{"v", cx.deg(0)}});
  if (seq.contains(n - 1)) return cx.hit("L1.2", {{"v", cx.deg(n - 1)}});

  const ClassSet bad = cx.bad(), dull = cx.dull();
  if (cx.size(bad) <= 1) return cx.hit("L5.1", {{"B", bad}});
  if (cx.size(dull) <= 1) return cx.hit("L5.2", {{"D", dull}});
  const ClassSet both = bad & dull;
  if (cx.size(both) == 1 && bad.count() == 2) return cx.hit("L5.3", {{"v", both}});
  if (cx.stubs(bad) < n + (cx.size(bad) & 1)) return cx.hit("L5.4", {{"B", bad}});

  const auto& degs = seq.degrees();
  for (std::size_t i = 0; i < degs.size(); ++i) {
    if (i > 0 && degs[i] == degs[i - 1]) continue;
    if (good_after_removing_one(degs, i)) return cx.hit("L1.4", {{"v", cx.deg(degs[i])}});
  }

  if (bad.count() == 2) {
    for (const auto& u : cx.uniques()) {
      if (!u.v.subset_of(bad)) continue;
      for (const auto& v : cx.uniques()) {
        if (v.v == u.v || !v.v.subset_of(dull)) continue;
        if (u.degree != v.degree + 1) return cx.hit("L6.1", {{"u", u.v}, {"v", v.v}});
      }
    }
  }
  if (bad.count() == 3) {
    ClassSet found;
    for (const auto& u : cx.uniques())
      if (u.v.subset_of(both)) found = found | u.v;
    if (found.count() >= 2) return cx.hit("L6.2", {{"uv", found}});
  }
  return std::nullopt;
}

Outcome general(RuleContext& cx, SeedSet seeds) {
  // Without bad vertices the good-target seed is vacuously contradictory;
  // that case belongs to the easy lemmas.
  if (cx.bad().empty() || cx.p().num_classes() > BoundState::kMaxClasses) return std::nullopt;
  if (seeds == SeedSet::Restricted) {
    if (hypothesis_state(cx.p(), SeedSet::Restricted).contradiction()) return cx.hit("G.1");
    return std::nullopt;
  }
  const BoundState* full = cx.state();
  if (!full || !full->contradiction()) return std::nullopt;
  if (hypothesis_state(cx.p(), SeedSet::Restricted).contradiction()) return cx.hit("G.1");
  return cx.hit("G.2");
}

}  // namespace detail

namespace {

using Family = detail::Outcome (*)(detail::RuleContext&);

ForcingVerdict run_one(const DegreeSequence& s, Family f) {
  detail::RuleContext cx(s);
  if (auto h = f(cx)) return ForcingVerdict::forcing(h->id);
  return ForcingVerdict::unknown();
}

void require_graphic(const DegreeSequence& s) {
  if (!is_graphic(s)) throw Error(ErrorCode::NotGraphic, s.to_string() + " is not graphic");
}

template <std::size_t N>
RuleReport run_families(const DegreeSequence& s, const std::array<Family, N>& families) {
  require_graphic(s);
  RuleReport report;
  report.sequence = s;
  report.verdict = ForcingVerdict::unknown();
  detail::RuleContext primal(s);
  detail::RuleContext dual(complement_sequence(s));
  for (Family f : families) {
    for (int side = 0; side < 2; ++side) {
      auto h = f(side == 0 ? primal : dual);
      if (!h) continue;
      report.verdict = ForcingVerdict::forcing(h->id);
      report.fired_rule = h->id;
      report.via_complement = side == 1;
      if (!h->roles.empty()) report.partition_used = std::move(h->roles);
      return report;
    }
  }
  return report;
}

detail::Outcome general_full(detail::RuleContext& cx) { return detail::general(cx, SeedSet::Full); }
detail::Outcome general_restricted(detail::RuleContext& cx) {
  return detail::general(cx, SeedSet::Restricted);
}
// The restricted catalogue covers the isolated/full/degree-gap lemmas and the
// bad-vertex counting lemma, not the two-unique-vertex lemma.
detail::Outcome easy_restricted(detail::RuleContext& cx) {
  auto h = detail::easy(cx);
  if (h && h->id.starts_with("L6")) return std::nullopt;
  return h;
}

}  // namespace

ForcingVerdict rule_easy(const DegreeSequence& s) { return run_one(s, detail::easy); }
ForcingVerdict rule_general(const DegreeSequence& s, SeedSet seeds) {
  return run_one(s, seeds == SeedSet::Full ? general_full : general_restricted);
}
ForcingVerdict rule_bad_stubs(const DegreeSequence& s) { return run_one(s, detail::bad_stubs); }
ForcingVerdict rule_unique(const DegreeSequence& s) { return run_one(s, detail::unique); }
ForcingVerdict rule_pendants(const DegreeSequence& s) { return run_one(s, detail::pendants); }
ForcingVerdict rule_sigma_tau(const DegreeSequence& s) { return run_one(s, detail::sigma_tau); }
ForcingVerdict rule_sigma_tau_unique(const DegreeSequence& s) {
  return run_one(s, detail::sigma_tau_unique);
}
ForcingVerdict rule_sigma_tau_unique_bad(const DegreeSequence& s) {
  return run_one(s, detail::sigma_tau_unique_bad);
}

RuleReport apply_catalog(const DegreeSequence& s) {
  static const std::array<Family, 8> families = {
      detail::easy,      general_full,         detail::bad_stubs,        detail::unique,
      detail::pendants,  detail::sigma_tau,    detail::sigma_tau_unique, detail::sigma_tau_unique_bad,
  };
  return run_families(s, families);
}

RuleReport apply_restricted(const DegreeSequence& s) {
  static const std::array<Family, 2> families = {easy_restricted, general_restricted};
  return run_families(s, families);
}

}  // namespace dsr
