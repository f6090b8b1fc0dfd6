#include "dsr/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>

#include "dsr/canonical.hpp"
#include "dsr/completability.hpp"
#include "dsr/error.hpp"

namespace dsr {

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::ProvedForcing: return "ProvedForcing";
    case VerdictStatus::ProvedNotForcing: return "ProvedNotForcing";
    case VerdictStatus::Unknown: return "Unknown";
  }
  return "?";
}

std::vector<DegreeSequence> graphic_sequences(int n) {
  std::vector<DegreeSequence> out;
  if (n <= 0) return out;
  std::vector<int> cur(n);
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos == n) {
      if (is_graphic(cur)) out.emplace_back(cur);
      return;
    }
    for (int d = lo; d < n; ++d) {
      cur[pos] = d;
      self(self, pos + 1, d);
    }
  };
  rec(rec, 0, 0);
  return out;
}

Graph havel_hakimi(const DegreeSequence& s) {
  if (!is_graphic(s)) throw Error(ErrorCode::NotGraphic, s.to_string());
  const int n = s.n();
  Graph g(n);
  std::vector<int> residual(s.degrees().begin(), s.degrees().end());
  std::vector<int> order(n);
  for (;;) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return residual[a] > residual[b]; });
    int v = order[0];
    if (residual[v] == 0) break;
    int need = residual[v];
    residual[v] = 0;
    for (int k = 1; k <= need; ++k) {
      g.add_edge(v, order[k]);
      --residual[order[k]];
    }
  }
  return g;
}

namespace {

class RealizationSearch {
 public:
  RealizationSearch(const DegreeSequence& s, const std::function<bool(const Graph&)>& visit)
      : n_(s.n()), target_(s.degrees().rbegin(), s.degrees().rend()), graph_(n_), visit_(visit) {}

  void run() { process(0); }

 private:
  int residual(int v) const { return target_[v] - graph_.degree(v); }

  bool residual_graphic(int from) const {
    std::vector<int> rest;
    rest.reserve(n_ - from);
    for (int v = from; v < n_; ++v) rest.push_back(residual(v));
    return is_graphic(rest);
  }

  // Maximal runs of later vertices with equal target and equal adjacency to
  // already-processed vertices; members of a run are interchangeable.
  std::vector<std::pair<int, int>> cells(int i) const {
    std::vector<std::pair<int, int>> out;
    const VertexMask processed = low_mask(i);
    for (int j = i + 1; j < n_;) {
      int k = j + 1;
      while (k < n_ && target_[k] == target_[j] && (graph_.row(k) & processed) == (graph_.row(j) & processed))
        ++k;
      out.emplace_back(j, k - j);
      j = k;
    }
    return out;
  }

  void process(int i) {
    if (stopped_) return;
    if (i == n_) {
      if (!visit_(graph_)) stopped_ = true;
      return;
    }
    const int need = residual(i);
    if (need == 0) {
      process(i + 1);
      return;
    }
    auto runs = cells(i);
    std::vector<int> suffix(runs.size() + 1, 0);
    for (int c = static_cast<int>(runs.size()) - 1; c >= 0; --c) suffix[c] = suffix[c + 1] + runs[c].second;
    choose(i, runs, suffix, 0, need);
  }

  void choose(int i, const std::vector<std::pair<int, int>>& runs, const std::vector<int>& suffix, std::size_t c,
              int need) {
    if (stopped_) return;
    if (need == 0) {
      if (residual_graphic(i + 1)) process(i + 1);
      return;
    }
    if (c == runs.size() || suffix[c] < need) return;
    auto [start, len] = runs[c];
    const int most = std::min(len, need);
    // Try larger counts first so high-degree neighbours fill early.
    for (int take = most; take >= 0; --take) {
      if (suffix[c + 1] < need - take) break;
      bool ok = true;
      for (int t = 0; t < take; ++t)
        if (residual(start + t) <= 0) ok = false;
      if (!ok) continue;
      for (int t = 0; t < take; ++t) graph_.add_edge(i, start + t);
      choose(i, runs, suffix, c + 1, need - take);
      for (int t = 0; t < take; ++t) graph_.remove_edge(i, start + t);
      if (stopped_) return;
    }
  }

  int n_;
  std::vector<int> target_;
  Graph graph_;
  const std::function<bool(const Graph&)>& visit_;
  bool stopped_ = false;
};

}  // namespace

void enumerate_realizations(const DegreeSequence& s, const std::function<bool(const Graph&)>& visit,
                            EnumerationOptions options) {
  if (!is_graphic(s)) throw Error(ErrorCode::NotGraphic, s.to_string());
  if (!options.dedup) {
    RealizationSearch(s, visit).run();
    return;
  }
  std::unordered_set<std::string> seen;
  std::function<bool(const Graph&)> filtered = [&](const Graph& g) {
    if (!seen.insert(certificate(g)).second) return true;
    return visit(g);
  };
  RealizationSearch(s, filtered).run();
}

std::vector<Graph> realizations(const DegreeSequence& s) {
  std::vector<Graph> out;
  enumerate_realizations(s, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

ForcingVerdict is_forcing_oracle(const DegreeSequence& s) {
  std::optional<Graph> witness;
  enumerate_realizations(
      s,
      [&](const Graph& g) {
        if (completable_vertices(g) != 0) return true;
        witness = g;
        return false;
      },
      {.dedup = false});
  if (witness) return ForcingVerdict::not_forcing(*witness);
  return ForcingVerdict::forcing("oracle");
}

ForcingVerdict switching_walk(const DegreeSequence& s, long budget, std::uint64_t seed) {
  Graph g = havel_hakimi(s);
  std::mt19937_64 rng(seed);
  const int n = g.n();
  struct Move {
    int a, c, b, d;
  };
  std::vector<Move> moves;
  for (long step = 0;; ++step) {
    VertexMask comp = completable_vertices(g);
    if (comp == 0) return ForcingVerdict::not_forcing(g);
    if (step >= budget) break;
    const int v = std::countr_zero(comp);
    // Switches replacing v-c and b-d by v-d and b-c.
    moves.clear();
    const VertexMask closed = g.row(v) | (VertexMask{1} << v);
    for_each_vertex(g.row(v), [&](int c) {
      for_each_vertex(low_mask(n) & ~closed, [&](int d) {
        if (d == c) return;
        for_each_vertex(g.row(d), [&](int b) {
          if (b != v && b != c && !g.has_edge(b, c)) moves.push_back({v, c, b, d});
        });
      });
    });
    if (moves.empty()) break;
    const Move& mv = moves[rng() % moves.size()];
    g = apply_switch(g, mv.a, mv.c, mv.b, mv.d);
  }
  return ForcingVerdict::unknown();
}

namespace {

struct SequenceTally {
  long graphs = 0, ds_r = 0, weakly = 0;
  bool forcing = true;
  bool good = false;
};

SequenceTally tally(const DegreeSequence& s) {
  SequenceTally t;
  t.good = all_degrees_good(s);
  enumerate_realizations(s, [&](const Graph& g) {
    ++t.graphs;
    bool dsr = completable_vertices(g) != 0;
    if (dsr) {
      ++t.ds_r;
      ++t.weakly;
    } else {
      t.forcing = false;
      if (is_weakly_ds_reconstructible(g)) ++t.weakly;
    }
    return true;
  });
  return t;
}

}  // namespace

CensusRow census(int n, int jobs) {
  CensusRow row;
  row.n = n;
  auto seqs = graphic_sequences(n);
  std::vector<SequenceTally> tallies(seqs.size());
  if (jobs <= 0) jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < seqs.size();) tallies[k] = tally(seqs[k]);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& t : tallies) {
    ++row.num_sequences;
    row.num_graphs += t.graphs;
    row.num_ds_reconstructible += t.ds_r;
    row.num_weakly += t.weakly;
    if (t.forcing) {
      ++row.num_forcing_sequences;
      row.num_forced_graphs += t.graphs;
    }
    if (t.good) {
      ++row.num_good_sequences;
      row.num_good_graphs += t.graphs;
    }
  }
  return row;
}

}  // namespace dsr
