#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dsr/degseq.hpp"
#include "dsr/graph.hpp"
#include "dsr/verdict.hpp"

namespace dsr {

/// One template: delete a vertex of `deleted_degree` whose neighbours have the
/// listed degrees, leaving `sequence` on n-1 vertices.
struct TemplateDeletion {
  int deleted_degree = 0;
  std::string role;
  /// (degree in the target, number of neighbours of that degree), ascending.
  std::vector<std::pair<int, int>> neighbour_degrees;
  DegreeSequence sequence;
  bool graphic = true;  // non-graphic templates are kept in the plan but skipped
  std::string rationale;
};

/// Realizations of the target are split by the first class of `class_order`
/// holding a completable vertex; the verdict guarantees one exists. Each
/// deletion makes the deleted vertex completable, so its card has exactly one
/// degree-consistent completion.
struct TemplatePlan {
  DegreeSequence target;
  std::vector<int> class_order;  // degrees, in priority order
  std::vector<TemplateDeletion> deletions;
  std::string rationale;
};

/// Throws NotForcing unless the verdict is ProvedForcing, NotGraphic if the
/// target is not graphic.
TemplatePlan plan_templates(const DegreeSequence& target, const ForcingVerdict& verdict);

struct GenerateOptions {
  /// Cross-check the output stream by certificates.
  bool verify = false;
  /// Also count the naive pre-dedup completions of the first planned class
  /// over all of its neighbour-degree selections.
  bool baseline = false;
  /// Worker threads for completing template realizations; <= 0 picks the
  /// hardware count.
  int jobs = 1;
  /// Emit in certificate order instead of template order.
  bool deterministic = false;
};

struct TemplateStats {
  DegreeSequence sequence;
  long realizations = 0;
  long emitted = 0;
  /// Completions whose canonical deletion lies in an earlier class or is a
  /// different vertex of the same class.
  long rejected = 0;
};

struct GenerateStats {
  ForcingVerdict verdict;
  std::vector<TemplateStats> templates;
  long emitted = 0;
  long collisions = 0;  // only counted with verify
  long baseline = -1;   // only computed with baseline
};

/// Streams every realization of a forcing target exactly once, built from
/// its order n-1 templates. The verdict comes from the rule catalogue, then
/// the oracle. Throws NotGraphic, NotForcing, or CompletionContradiction if
/// a planned card has an ambiguous completion.
GenerateStats generate_accelerated(const DegreeSequence& target, const std::function<void(const Graph&)>& visit,
                                   GenerateOptions options = {});

/// As above with an explicit plan.
GenerateStats generate_from_plan(const TemplatePlan& plan, const std::function<void(const Graph&)>& visit,
                                 GenerateOptions options = {});

}  // namespace dsr
