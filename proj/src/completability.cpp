#include "dsr/completability.hpp"

#include <array>

#include "dsr/canonical.hpp"
#include "dsr/error.hpp"

namespace dsr {

const char* to_string(CompletionStatus s) {
  switch (s) {
    case CompletionStatus::Unique: return "Unique";
    case CompletionStatus::Ambiguous: return "Ambiguous";
    case CompletionStatus::Infeasible: return "Infeasible";
  }
  return "?";
}

VertexMask completable_vertices(const Graph& g) {
  const int n = g.n();
  std::array<VertexMask, 65> by_degree{};
  for (int v = 0; v < n; ++v) by_degree[g.degree(v)] |= VertexMask{1} << v;
  VertexMask out = 0;
  for (int v = 0; v < n; ++v) {
    VertexMask dv = 0;
    for_each_vertex(g.row(v), [&](int w) {
      int d = g.degree(w);
      if (d > 0) dv |= by_degree[d - 1];
    });
    VertexMask closed = g.row(v) | (VertexMask{1} << v);
    if ((dv & ~closed) == 0) out |= VertexMask{1} << v;
  }
  return out;
}

bool is_ds_completable(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  return (completable_vertices(g) >> v) & 1U;
}

bool is_ds_reconstructible(const Graph& g) { return completable_vertices(g) != 0; }

CompletionOutcome complete_card(const Card& card, bool enumerate) {
  const Graph& h = card.graph;
  const DegreeSequence& pi = card.context;
  CompletionOutcome out;
  if (pi.n() != h.n() + 1) throw Error(ErrorCode::VertexOutOfRange, "context order must be card order + 1");
  if (!is_graphic(pi)) throw Error(ErrorCode::NotGraphic, pi.to_string());

  // The edge count fixes the deleted degree: m(G) = m(card) + d_v.
  const int dv = pi.m2() / 2 - h.num_edges();
  if (dv < 0 || dv > h.n() || !pi.contains(dv)) return out;
  out.deleted_degree = dv;

  // Degree table: target counts c_e of the parent sequence without d_v,
  // card counts k_e. With a_e card vertices of card degree e chosen as
  // neighbours, c_e = (k_e - a_e) + a_{e-1}.
  const int top = h.n() + 1;
  std::vector<int> target(top + 1, 0), card_count(top + 1, 0);
  bool removed = false;
  for (int d : pi.degrees()) {
    if (d == dv && !removed) {
      removed = true;
      continue;
    }
    ++target[d];
  }
  std::vector<VertexMask> members(top + 1, 0);
  for (int v = 0; v < h.n(); ++v) {
    ++card_count[h.degree(v)];
    members[h.degree(v)] |= VertexMask{1} << v;
  }
  std::vector<int> chosen(top + 1, 0);
  int carry = 0, total = 0;
  for (int e = 0; e <= top; ++e) {
    int a = card_count[e] + carry - target[e];
    if (a < 0 || a > card_count[e]) return out;
    chosen[e] = a;
    carry = a;
    total += a;
  }
  if (total != dv) return out;

  bool ambiguous = false;
  for (int e = 0; e <= top; ++e) {
    if (card_count[e] == 0) continue;
    NeighbourDegreeGroup grp{e, card_count[e], chosen[e]};
    ambiguous |= grp.ambiguous();
    out.groups.push_back(grp);
  }
  out.status = ambiguous ? CompletionStatus::Ambiguous : CompletionStatus::Unique;
  if (!enumerate) return out;

  // Cartesian product of a_e-subsets of every group.
  std::vector<std::vector<VertexMask>> options;
  for (const auto& grp : out.groups) {
    std::vector<int> verts;
    for_each_vertex(members[grp.card_degree], [&](int v) { verts.push_back(v); });
    std::vector<VertexMask> subsets;
    const int k = static_cast<int>(verts.size());
    for (std::uint32_t s = 0; s < (1U << k); ++s) {
      if (std::popcount(s) != grp.neighbours) continue;
      VertexMask m = 0;
      for (int b = 0; b < k; ++b)
        if ((s >> b) & 1U) m |= VertexMask{1} << verts[b];
      subsets.push_back(m);
    }
    options.push_back(std::move(subsets));
  }
  std::vector<std::size_t> idx(options.size(), 0);
  for (;;) {
    VertexMask s = 0;
    for (std::size_t i = 0; i < options.size(); ++i) s |= options[i][idx[i]];
    out.completions.push_back({s, add_vertex(h, s)});
    std::size_t i = 0;
    while (i < options.size() && ++idx[i] == options[i].size()) idx[i++] = 0;
    if (i == options.size()) break;
  }
  return out;
}

bool is_weakly_ds_reconstructible(const Graph& g) {
  if (g.n() <= 1) return true;
  const VertexMask completable = completable_vertices(g);
  if (completable != 0) return true;
  const DegreeSequence pi = g.degree_sequence();
  const std::string cert = certificate(g);
  for (int v = 0; v < g.n(); ++v) {
    auto outcome = complete_card({delete_vertex(g, v), pi});
    bool all_same = true;
    for (const auto& c : outcome.completions) {
      if (certificate(c.result) != cert) {
        all_same = false;
        break;
      }
    }
    if (all_same) return true;
  }
  return false;
}

}  // namespace dsr
