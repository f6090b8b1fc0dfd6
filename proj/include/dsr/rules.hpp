#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dsr/bounds.hpp"
#include "dsr/degseq.hpp"
#include "dsr/verdict.hpp"

namespace dsr {

/// A vertex of unique degree d_v with its neighbouring degree classes.
struct UniqueVertexContext {
  int degree = 0;
  ClassSet v;      // the class {v}
  ClassSet alpha;  // degree d_v - 1 (possibly empty)
  ClassSet beta;   // degree d_v + 1 (possibly empty)
  ClassSet s;      // (D - v) - alpha: v must miss one of these
  ClassSet t;      // (B - v) - beta: v must hit one of these

  static std::vector<UniqueVertexContext> all(const SequenceProfile& p);
};

/// Which hypothesis-level seeds go into the state built by hypothesis_state.
enum class SeedSet {
  Restricted,  // good-target, neighbourly-target and minimum-edge bounds
  Full,        // additionally the neighbourly-j miss count
};

/// Generic graph facts only: totals, caps, additivity, chi floors, parity.
BoundState propagate(BoundState bs);

/// Bounds valid for any realization of the profile's sequence in which no
/// vertex is ds-completable. A contradiction proves the sequence forcing.
BoundState hypothesis_state(const SequenceProfile& p, SeedSet seeds = SeedSet::Full);

ForcingVerdict rule_easy(const DegreeSequence& s);
ForcingVerdict rule_general(const DegreeSequence& s, SeedSet seeds = SeedSet::Full);
ForcingVerdict rule_bad_stubs(const DegreeSequence& s);
ForcingVerdict rule_unique(const DegreeSequence& s);
ForcingVerdict rule_pendants(const DegreeSequence& s);
ForcingVerdict rule_sigma_tau(const DegreeSequence& s);
ForcingVerdict rule_sigma_tau_unique(const DegreeSequence& s);
ForcingVerdict rule_sigma_tau_unique_bad(const DegreeSequence& s);

struct RuleReport {
  DegreeSequence sequence;
  ForcingVerdict verdict;
  /// Set iff the verdict is ProvedForcing.
  std::optional<std::string> fired_rule;
  /// The rule fired on the complement sequence.
  bool via_complement = false;
  /// Role name -> member degrees, for rules that name a partition.
  std::optional<std::map<std::string, std::vector<int>>> partition_used;
};

/// Runs every family in order on s, then on its complement; first proof
/// wins. Throws NotGraphic.
RuleReport apply_catalog(const DegreeSequence& s);

/// Only the easy lemmas and the restricted general bounds, on s and its
/// complement. Throws NotGraphic.
RuleReport apply_restricted(const DegreeSequence& s);

}  // namespace dsr
