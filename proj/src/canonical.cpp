#include "dsr/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace dsr {
namespace {

using Cells = std::vector<VertexMask>;

// Splits cells by neighbour counts into earlier cells until equitable. Split
// order depends on counts only, so the result is label-invariant.
void refine(const Graph& g, Cells& cells) {
  for (;;) {
    bool split = false;
    for (std::size_t w = 0; w < cells.size() && !split; ++w) {
      const VertexMask splitter = cells[w];
      for (std::size_t x = 0; x < cells.size(); ++x) {
        const VertexMask cell = cells[x];
        if (std::popcount(cell) == 1) continue;
        std::array<VertexMask, 65> by_count{};
        int lo = 64, hi = -1;
        for_each_vertex(cell, [&](int v) {
          int c = std::popcount(g.row(v) & splitter);
          by_count[c] |= VertexMask{1} << v;
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        });
        if (lo == hi) continue;
        Cells parts;
        for (int c = lo; c <= hi; ++c)
          if (by_count[c] != 0) parts.push_back(by_count[c]);
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), parts.begin(), parts.end());
        split = true;
        break;
      }
    }
    if (!split) return;
  }
}

struct Search {
  const Graph& g;
  int n;
  std::vector<VertexMask> best_rows;
  std::vector<int> best_lab;
  std::vector<std::vector<int>> automorphisms;
  std::vector<int> prefix;

  explicit Search(const Graph& graph) : g(graph), n(graph.n()) {}

  void add_twin_swaps() {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        VertexMask bu = VertexMask{1} << u, bv = VertexMask{1} << v;
        if ((g.row(u) & ~bv) == (g.row(v) & ~bu)) {
          std::vector<int> perm(n);
          std::iota(perm.begin(), perm.end(), 0);
          std::swap(perm[u], perm[v]);
          automorphisms.push_back(std::move(perm));
        }
      }
  }

  void leaf(const Cells& cells) {
    std::vector<int> lab(n);
    for (int k = 0; k < n; ++k) lab[std::countr_zero(cells[k])] = k;
    std::vector<VertexMask> rows(n, 0);
    for (int v = 0; v < n; ++v) {
      VertexMask r = 0;
      for_each_vertex(g.row(v), [&](int w) { r |= VertexMask{1} << lab[w]; });
      rows[lab[v]] = r;
    }
    if (best_lab.empty() || rows > best_rows) {
      best_rows = std::move(rows);
      best_lab = std::move(lab);
    } else if (rows == best_rows && automorphisms.size() < 256) {
      std::vector<int> inv(n);
      for (int v = 0; v < n; ++v) inv[best_lab[v]] = v;
      std::vector<int> perm(n);
      for (int v = 0; v < n; ++v) perm[v] = inv[lab[v]];
      automorphisms.push_back(std::move(perm));
    }
  }

  // Orbits of `cell` under the stored automorphisms that fix the prefix pointwise.
  std::vector<int> orbit_roots() const {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& perm : automorphisms) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return perm[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n; ++v) {
        int a = find(v), b = find(perm[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n; ++v) parent[v] = find(v);
    return parent;
  }

  void run(Cells cells) {
    refine(g, cells);
    if (static_cast<int>(cells.size()) == n) {
      leaf(cells);
      return;
    }
    std::size_t target = 0;
    while (std::popcount(cells[target]) == 1) ++target;
    const VertexMask cell = cells[target];
    VertexMask explored_roots = 0;
    for_each_vertex(cell, [&](int v) {
      auto roots = orbit_roots();
      if ((explored_roots >> roots[v]) & 1U) return;
      explored_roots |= VertexMask{1} << roots[v];
      Cells child = cells;
      child[target] = VertexMask{1} << v;
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, cell & ~(VertexMask{1} << v));
      prefix.push_back(v);
      run(std::move(child));
      prefix.pop_back();
    });
  }
};

std::string pack(int n, const std::vector<VertexMask>& rows) {
  std::string out;
  const int bytes = (n + 7) / 8;
  out.reserve(1 + static_cast<std::size_t>(n) * bytes);
  out.push_back(static_cast<char>(n));
  for (VertexMask r : rows)
    for (int b = 0; b < bytes; ++b) out.push_back(static_cast<char>((r >> (8 * b)) & 0xFF));
  return out;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  CanonicalForm out;
  const int n = g.n();
  if (n == 0) {
    out.certificate = pack(0, {});
    return out;
  }
  Search search(g);
  search.add_twin_swaps();
  // Initial partition: vertices by ascending degree.
  Cells cells;
  std::array<VertexMask, 65> by_degree{};
  for (int v = 0; v < n; ++v) by_degree[g.degree(v)] |= VertexMask{1} << v;
  for (auto m : by_degree)
    if (m != 0) cells.push_back(m);
  search.run(std::move(cells));

  out.labelling = search.best_lab;
  out.graph = relabel(g, out.labelling);
  out.certificate = pack(n, search.best_rows);
  return out;
}

std::string certificate(const Graph& g) { return canonical_form(g).certificate; }

}  // namespace dsr
