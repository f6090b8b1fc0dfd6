#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsr/degseq.hpp"

namespace dsr {

using VertexMask = std::uint64_t;

inline VertexMask low_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

template <class F>
void for_each_vertex(VertexMask m, F&& f) {
  for (; m != 0; m &= m - 1) f(std::countr_zero(m));
}

/// Simple undirected labelled graph on at most 64 vertices; one adjacency
/// word per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int n() const { return static_cast<int>(rows_.size()); }
  VertexMask row(int v) const { return rows_[v]; }
  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  int num_edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  std::vector<int> degrees() const;
  DegreeSequence degree_sequence() const;
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexMask> rows_;
};

/// G - v; vertices above v shift down by one.
Graph delete_vertex(const Graph& g, int v);
/// Appends a new vertex (index n) adjacent to `neighbours`.
Graph add_vertex(const Graph& g, VertexMask neighbours);
Graph complement(const Graph& g);
/// Applies a vertex permutation: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// ac and bd are edges, ad and bc are not.
bool admits_switch(const Graph& g, int a, int c, int b, int d);
/// G - ac - bd + ad + bc. Throws NotAdmitted.
Graph apply_switch(const Graph& g, int a, int c, int b, int d);

/// Standard graph6 encoding (no header, no newline).
std::string write_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" prefix and a trailing newline.
Graph read_graph6(std::string_view line);

}  // namespace dsr
