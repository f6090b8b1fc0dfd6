#include "dsr/graph.hpp"

#include <algorithm>

#include "dsr/error.hpp"

namespace dsr {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) throw Error(ErrorCode::VertexOutOfRange, "order " + std::to_string(n));
  rows_.assign(n, 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Graph::num_edges() const {
  int total = 0;
  for (auto r : rows_) total += std::popcount(r);
  return total / 2;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n() || v >= n() || u == v)
    throw Error(ErrorCode::VertexOutOfRange, "edge " + std::to_string(u) + "-" + std::to_string(v));
  rows_[u] |= VertexMask{1} << v;
  rows_[v] |= VertexMask{1} << u;
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n() || v >= n())
    throw Error(ErrorCode::VertexOutOfRange, "edge " + std::to_string(u) + "-" + std::to_string(v));
  rows_[u] &= ~(VertexMask{1} << v);
  rows_[v] &= ~(VertexMask{1} << u);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(n());
  for (int v = 0; v < n(); ++v) out[v] = degree(v);
  return out;
}

DegreeSequence Graph::degree_sequence() const { return DegreeSequence(degrees()); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n(); ++u)
    for_each_vertex(rows_[u] & ~low_mask(u + 1), [&](int v) { out.emplace_back(u, v); });
  return out;
}

namespace {

// Drops bit v and shifts the higher bits down by one.
VertexMask squeeze(VertexMask row, int v) {
  VertexMask lo = row & low_mask(v);
  VertexMask hi = v + 1 >= 64 ? 0 : row >> (v + 1);
  return lo | (hi << v);
}

}  // namespace

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  Graph out(g.n() - 1);
  for (int u = 0, k = 0; u < g.n(); ++u) {
    if (u == v) continue;
    VertexMask r = squeeze(g.row(u), v);
    for_each_vertex(r, [&](int w) {
      if (w > k) out.add_edge(k, w);
    });
    ++k;
  }
  return out;
}

Graph add_vertex(const Graph& g, VertexMask neighbours) {
  if (g.n() >= kMaxVertices) throw Error(ErrorCode::VertexOutOfRange, "graph already has 64 vertices");
  Graph out(g.n() + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for_each_vertex(neighbours & low_mask(g.n()), [&](int w) { out.add_edge(g.n(), w); });
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  Graph out(g.n());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

bool admits_switch(const Graph& g, int a, int c, int b, int d) {
  const int q[4] = {a, b, c, d};
  for (int x : q)
    if (x < 0 || x >= g.n()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(x));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (q[i] == q[j]) return false;
  return g.has_edge(a, c) && g.has_edge(b, d) && !g.has_edge(a, d) && !g.has_edge(b, c);
}

Graph apply_switch(const Graph& g, int a, int c, int b, int d) {
  if (!admits_switch(g, a, c, b, d)) throw Error(ErrorCode::NotAdmitted, "switch not admitted");
  Graph out = g;
  out.remove_edge(a, c);
  out.remove_edge(b, d);
  out.add_edge(a, d);
  out.add_edge(b, c);
  return out;
}

std::string write_graph6(const Graph& g) {
  std::string out;
  const int n = g.n();
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph read_graph6(std::string_view line) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Error(ErrorCode::MalformedHeader, "empty line");
  for (char ch : line)
    if (ch < 63 || ch > 126) throw Error(ErrorCode::MalformedHeader, "byte outside graph6 range");

  std::size_t pos = 0;
  int n = 0;
  if (line[0] != 126) {
    n = line[0] - 63;
    pos = 1;
  } else {
    if (line.size() < 4 || line[1] == 126) throw Error(ErrorCode::MalformedHeader, "bad extended order");
    n = ((line[1] - 63) << 12) | ((line[2] - 63) << 6) | (line[3] - 63);
    pos = 4;
  }
  if (n > kMaxVertices) throw Error(ErrorCode::MalformedHeader, "order " + std::to_string(n) + " exceeds 64");

  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (line.size() - pos < nbytes) throw Error(ErrorCode::TruncatedBody, "body too short");
  if (line.size() - pos > nbytes) throw Error(ErrorCode::MalformedHeader, "body longer than order allows");

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = line[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace dsr
