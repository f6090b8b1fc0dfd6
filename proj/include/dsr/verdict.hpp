#pragma once

#include <optional>
#include <string>

#include "dsr/graph.hpp"

namespace dsr {

enum class VerdictStatus { ProvedForcing, ProvedNotForcing, Unknown };

const char* to_string(VerdictStatus s);

/// ProvedForcing(rule-id) | ProvedNotForcing(witness) | Unknown.
struct ForcingVerdict {
  VerdictStatus status = VerdictStatus::Unknown;
  std::string rule;               // set when ProvedForcing ("oracle" for the enumeration oracle)
  std::optional<Graph> witness;   // set when ProvedNotForcing

  static ForcingVerdict forcing(std::string rule_id) {
    return {VerdictStatus::ProvedForcing, std::move(rule_id), std::nullopt};
  }
  static ForcingVerdict not_forcing(Graph witness_graph) {
    return {VerdictStatus::ProvedNotForcing, {}, std::move(witness_graph)};
  }
  static ForcingVerdict unknown() { return {}; }

  bool proved_forcing() const { return status == VerdictStatus::ProvedForcing; }
  bool proved_not_forcing() const { return status == VerdictStatus::ProvedNotForcing; }
  bool is_unknown() const { return status == VerdictStatus::Unknown; }
};

}  // namespace dsr
