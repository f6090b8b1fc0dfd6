#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dsr/degseq.hpp"
#include "dsr/graph.hpp"
#include "dsr/verdict.hpp"

namespace dsr {

/// Every graphic sequence of length n (isolated vertices included), in
/// lexicographic order.
std::vector<DegreeSequence> graphic_sequences(int n);

/// A deterministic realization (Havel–Hakimi). Throws NotGraphic.
Graph havel_hakimi(const DegreeSequence& s);

struct EnumerationOptions {
  /// Drop isomorphic duplicates by certificate. When false the stream may
  /// repeat isomorphism classes (still far fewer than all labellings).
  bool dedup = true;
};

/// Streams realizations of s in a deterministic order. The visitor returns
/// false to stop early. Vertices are labelled by descending degree.
/// Throws NotGraphic.
void enumerate_realizations(const DegreeSequence& s, const std::function<bool(const Graph&)>& visit,
                            EnumerationOptions options = {});

std::vector<Graph> realizations(const DegreeSequence& s);

/// Ground truth: ProvedForcing("oracle") or ProvedNotForcing(witness).
ForcingVerdict is_forcing_oracle(const DegreeSequence& s);

/// Heuristic witness search by switches that break the neighbourhood of the
/// first completable vertex. Never returns ProvedForcing.
ForcingVerdict switching_walk(const DegreeSequence& s, long budget, std::uint64_t seed);

struct CensusRow {
  int n = 0;
  long num_sequences = 0;
  long num_forcing_sequences = 0;
  long num_graphs = 0;
  long num_ds_reconstructible = 0;
  long num_forced_graphs = 0;
  long num_weakly = 0;
  long num_good_sequences = 0;
  long num_good_graphs = 0;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// All columns computed from scratch. `jobs` <= 0 picks the hardware count.
CensusRow census(int n, int jobs = 1);

}  // namespace dsr
