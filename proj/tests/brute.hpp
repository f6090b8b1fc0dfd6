#pragma once

// Brute-force reference implementations over labelled graphs, sharing no code
// with the library beyond the Graph container. Only practical for n <= 6.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "dsr/graph.hpp"

namespace brute {

inline std::vector<std::pair<int, int>> pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

inline dsr::Graph from_mask(int n, std::uint64_t mask) {
  dsr::Graph g(n);
  const auto ps = pairs(n);
  for (std::size_t k = 0; k < ps.size(); ++k)
    if ((mask >> k) & 1U) g.add_edge(ps[k].first, ps[k].second);
  return g;
}

/// Least edge mask over all relabellings.
inline std::uint64_t canon(const dsr::Graph& g) {
  const int n = g.n();
  const auto ps = pairs(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < ps.size(); ++k)
      if (g.has_edge(perm[ps[k].first], perm[ps[k].second])) m |= std::uint64_t{1} << k;
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::vector<int> sorted_degrees(const dsr::Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

/// Every neighbour set of a new vertex that turns `card` into a graph with
/// degree multiset `target`.
inline std::vector<dsr::Graph> extensions(const dsr::Graph& card, const std::vector<int>& target) {
  std::vector<dsr::Graph> out;
  const int m = card.n();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    dsr::Graph g(m + 1);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (card.has_edge(a, b)) g.add_edge(a, b);
    for (int a = 0; a < m; ++a)
      if ((s >> a) & 1U) g.add_edge(a, m);
    if (sorted_degrees(g) == target) out.push_back(g);
  }
  return out;
}

/// The card G - v has exactly one degree-consistent completion.
inline bool completable(const dsr::Graph& g, int v) {
  return extensions(dsr::delete_vertex(g, v), sorted_degrees(g)).size() == 1;
}

inline bool reconstructible(const dsr::Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (completable(g, v)) return true;
  return false;
}

inline bool weakly(const dsr::Graph& g) {
  const auto key = canon(g);
  for (int v = 0; v < g.n(); ++v) {
    bool all_same = true;
    for (const auto& h : extensions(dsr::delete_vertex(g, v), sorted_degrees(g)))
      if (canon(h) != key) {
        all_same = false;
        break;
      }
    if (all_same) return true;
  }
  return false;
}

/// One representative per isomorphism class of order n, keyed by canon.
inline std::map<std::uint64_t, dsr::Graph> classes(int n) {
  std::map<std::uint64_t, dsr::Graph> out;
  const std::uint64_t limit = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    auto g = from_mask(n, mask);
    out.try_emplace(canon(g), g);
  }
  return out;
}

struct Row {
  long sequences = 0, forcing = 0, graphs = 0, dsr = 0, forced = 0, weak = 0, good_sequences = 0,
       good_graphs = 0;
};

inline bool all_good(const std::vector<int>& d) {
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (d[j] - d[i] == 1 || d[i] - d[j] == 1) return false;
  return true;
}

/// The census columns computed from labelled-graph brute force.
inline Row census(int n) {
  Row r;
  std::map<std::vector<int>, std::vector<dsr::Graph>> by_seq;
  for (const auto& [key, g] : classes(n)) by_seq[sorted_degrees(g)].push_back(g);
  for (const auto& [seq, graphs] : by_seq) {
    ++r.sequences;
    bool forcing = true;
    long dsr = 0;
    for (const auto& g : graphs) {
      const bool rec = reconstructible(g);
      dsr += rec;
      forcing &= rec;
      r.weak += weakly(g);
    }
    r.graphs += static_cast<long>(graphs.size());
    r.dsr += dsr;
    if (forcing) {
      ++r.forcing;
      r.forced += static_cast<long>(graphs.size());
    }
    if (all_good(seq)) {
      ++r.good_sequences;
      r.good_graphs += static_cast<long>(graphs.size());
    }
  }
  return r;
}

}  // namespace brute
