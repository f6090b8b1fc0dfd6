#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dsr/rules.hpp"

namespace dsr::detail {

struct Hit {
  std::string id;
  std::map<std::string, std::vector<int>> roles;
};
using Outcome = std::optional<Hit>;

/// Per-sequence cache shared by the rule families.
class RuleContext {
 public:
  explicit RuleContext(const DegreeSequence& s) : profile_(s) {}

  const SequenceProfile& p() const { return profile_; }
  /// The full hypothesis state, or nullptr if the sequence has too many
  /// distinct degrees for the bound table.
  const BoundState* state();
  /// The state the rule families read sigma and tau from: the restricted
  /// hypothesis state, falling back to its static seeds alone and then to
  /// the plain propagated state while the candidate is contradictory (a
  /// contradictory state would let every family fire).
  /// nullptr on too many distinct degrees.
  const BoundState* family_state();
  /// Good-target and neighbourly-target seeds only, propagated; no
  /// minimum-edge seeds. nullptr on too many distinct degrees.
  const BoundState* static_state();
  /// Good-target seeds only, propagated.
  const BoundState* good_target_state();
  const std::vector<UniqueVertexContext>& uniques();

  int n() const { return profile_.n(); }
  int size(ClassSet x) const { return profile_.size(x); }
  int stubs(ClassSet x) const { return profile_.stubs(x); }
  ClassSet all() const { return profile_.all(); }
  ClassSet bad() const { return profile_.bad(); }
  ClassSet dull() const { return profile_.dull(); }
  ClassSet good() const { return profile_.good(); }
  ClassSet comp(ClassSet x) const { return profile_.complement(x); }
  ClassSet deg(int d) const { return profile_.of_degree(d); }
  /// Classes with degree in [lo, hi].
  ClassSet range(int lo, int hi) const {
    return profile_.select([&](int d) { return d >= lo && d <= hi; });
  }
  bool neighbourly(ClassSet x) const { return profile_.neighbourly(x); }
  /// The complement of x is neighbourly.
  bool mu(ClassSet x) const { return profile_.neighbourly(comp(x)); }
  int kappa(ClassSet x, int d) const { return profile_.kappa(x, d); }
  int xi(ClassSet x) const { return profile_.xi(x); }
  int chi(ClassSet i, ClassSet j) const { return profile_.chi(i, j); }
  int bad_degree_count() const { return bad().count(); }

  Hit hit(std::string id, std::initializer_list<std::pair<const char*, ClassSet>> roles = {}) const;

 private:
  SequenceProfile profile_;
  std::optional<BoundState> state_;
  bool state_tried_ = false;
  std::optional<BoundState> family_state_;
  bool family_tried_ = false;
  std::optional<BoundState> static_state_;
  bool static_tried_ = false;
  std::optional<BoundState> good_target_state_;
  bool good_target_tried_ = false;
  std::optional<std::vector<UniqueVertexContext>> uniques_;
};

inline int pos(int x) { return x > 0 ? x : 0; }

/// Calls f on every non-empty subset of u.
template <class F>
void for_subsets(ClassSet u, F&& f) {
  for (std::uint64_t b = u.bits; b != 0; b = (b - 1) & u.bits) f(ClassSet{b});
}

/// Like for_subsets but stops when f returns a hit.
template <class F>
Outcome find_subset(ClassSet u, F&& f) {
  for (std::uint64_t b = u.bits; b != 0; b = (b - 1) & u.bits)
    if (auto h = f(ClassSet{b})) return h;
  return std::nullopt;
}

/// Lower bound on eps(i, j) for disjoint i, j when no vertex is completable,
/// given an upper bound for tau on other pairs; nullopt when i meets D and
/// V - i is not neighbourly.
std::optional<int> min_edge_formula(const SequenceProfile& p, ClassSet i, ClassSet j,
                                    const std::function<int(ClassSet, ClassSet)>& tau);
bool seed_min_edges(BoundState& bs);

/// tau(x, y) from the state, tightened by the good-target and
/// neighbourly-target caps applied directly.
int tau_cap(const SequenceProfile& p, const BoundState& S, ClassSet x, ClassSet y);
/// sigma(i, j) from the state, raised by the minimum-edge formula fed with tau_cap.
int sigma_lb(const SequenceProfile& p, const BoundState& S, ClassSet i, ClassSet j);
void seed_static(BoundState& bs, SeedSet seeds);

Outcome easy(RuleContext& cx);
Outcome general(RuleContext& cx, SeedSet seeds);
Outcome bad_stubs(RuleContext& cx);
Outcome unique(RuleContext& cx);
Outcome pendants(RuleContext& cx);
Outcome sigma_tau(RuleContext& cx);
Outcome sigma_tau_unique(RuleContext& cx);
Outcome sigma_tau_unique_bad(RuleContext& cx);

}  // namespace dsr::detail
