#pragma once

#include <string>
#include <vector>

#include "dsr/graph.hpp"

namespace dsr {

/// Isomorphism-class representative.
struct CanonicalForm {
  Graph graph;                  // relabelled representative
  std::vector<int> labelling;   // labelling[v] = index of v in `graph`
  std::string certificate;      // order byte followed by packed rows of `graph`
};

/// Degree-partition refinement plus backtracking over individualisations,
/// pruned by automorphisms discovered during the search (and twin swaps).
/// The representative is the leaf with the lexicographically largest rows.
CanonicalForm canonical_form(const Graph& g);

std::string certificate(const Graph& g);

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.n() == b.n() && a.num_edges() == b.num_edges() && certificate(a) == certificate(b);
}

}  // namespace dsr
