#pragma once

#include <string>
#include <vector>

#include "dsr/degseq.hpp"
#include "dsr/graph.hpp"

namespace dsr {

/// A vertex-deleted subgraph together with the parent's degree sequence.
struct Card {
  Graph graph;
  DegreeSequence context;
};

enum class CompletionStatus { Unique, Ambiguous, Infeasible };

const char* to_string(CompletionStatus s);

/// One group of the degree table: card vertices of a given card degree and
/// how many of them must be neighbours of the missing vertex.
struct NeighbourDegreeGroup {
  int card_degree = 0;
  int size = 0;
  int neighbours = 0;
  bool ambiguous() const { return neighbours > 0 && neighbours < size; }
};

struct Completion {
  VertexMask neighbours = 0;  // within the card
  Graph result;               // card plus the restored vertex (index card.n)
};

struct CompletionOutcome {
  CompletionStatus status = CompletionStatus::Infeasible;
  int deleted_degree = -1;
  std::vector<NeighbourDegreeGroup> groups;
  std::vector<Completion> completions;
};

/// Vertices v with D_v ⊆ N[v]: no non-neighbour of v has degree one less
/// than a neighbour of v.
VertexMask completable_vertices(const Graph& g);
bool is_ds_completable(const Graph& g, int v);
bool is_ds_reconstructible(const Graph& g);

/// Degree-table completion of a card. With `enumerate` false only the
/// status and groups are computed.
CompletionOutcome complete_card(const Card& card, bool enumerate = true);

/// Some card of g has all of its degree-consistent one-vertex extensions
/// isomorphic to g.
bool is_weakly_ds_reconstructible(const Graph& g);

}  // namespace dsr
