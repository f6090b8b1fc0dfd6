#include "dsr/generator.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <optional>
#include <thread>
#include <unordered_set>

#include "dsr/canonical.hpp"
#include "dsr/completability.hpp"
#include "dsr/enumeration.hpp"
#include "dsr/error.hpp"
#include "dsr/rules.hpp"

namespace dsr {

namespace {

struct DegreeClassCount {
  int degree;
  int count;
};

std::vector<DegreeClassCount> class_counts(const DegreeSequence& s) {
  std::vector<DegreeClassCount> out;
  for (int d : s.degrees()) {
    if (!out.empty() && out.back().degree == d)
      ++out.back().count;
    else
      out.push_back({d, 1});
  }
  return out;
}

/// Neighbour-degree selections k (per class, summing to the deleted degree)
/// for a vertex of class x. Lower classes take their largest counts first.
/// With `completable_only`, a class may be hit only if the class one degree
/// below (x itself excluded) is hit entirely.
std::vector<std::vector<int>> selections(const std::vector<DegreeClassCount>& cls, std::size_t x,
                                         bool completable_only) {
  const int dx = cls[x].degree;
  std::vector<int> avail(cls.size());
  for (std::size_t c = 0; c < cls.size(); ++c) avail[c] = cls[c].degree == 0 ? 0 : cls[c].count - (c == x ? 1 : 0);
  std::vector<std::vector<int>> out;
  std::vector<int> k(cls.size(), 0);
  auto rec = [&](auto&& self, std::size_t c, int left) -> void {
    if (c == cls.size()) {
      if (left == 0) out.push_back(k);
      return;
    }
    for (int t = std::min(avail[c], left); t >= 0; --t) {
      if (completable_only && t > 0 && c > 0 && cls[c - 1].degree == cls[c].degree - 1 && k[c - 1] != avail[c - 1])
        continue;
      k[c] = t;
      self(self, c + 1, left - t);
    }
    k[c] = 0;
  };
  rec(rec, 0, dx);
  return out;
}

/// nullopt when an unhit vertex keeps a degree too large for order n-1.
std::optional<TemplateDeletion> make_deletion(const std::vector<DegreeClassCount>& cls, std::size_t x,
                                              const std::vector<int>& k, std::string role, std::string rationale) {
  TemplateDeletion t;
  t.deleted_degree = cls[x].degree;
  t.role = std::move(role);
  t.rationale = std::move(rationale);
  std::vector<int> degs;
  for (std::size_t c = 0; c < cls.size(); ++c) {
    const int avail = cls[c].count - (c == x ? 1 : 0);
    for (int i = 0; i < avail; ++i) degs.push_back(i < k[c] ? cls[c].degree - 1 : cls[c].degree);
    if (k[c] > 0) t.neighbour_degrees.emplace_back(cls[c].degree, k[c]);
  }
  const int order = static_cast<int>(degs.size());
  if (std::any_of(degs.begin(), degs.end(), [&](int d) { return d >= order; })) return std::nullopt;
  t.graphic = is_graphic(degs);
  t.sequence = DegreeSequence(std::move(degs));
  return t;
}

std::size_t class_index(const std::vector<DegreeClassCount>& cls, int degree) {
  for (std::size_t c = 0; c < cls.size(); ++c)
    if (cls[c].degree == degree) return c;
  throw Error(ErrorCode::RoleMissing, "no class of degree " + std::to_string(degree));
}

/// Degrees named by the role `name` of the catalogue report, mapped back to
/// the target when the rule fired on the complement.
std::vector<int> role_degrees(const RuleReport& r, const std::string& name) {
  std::vector<int> out;
  if (!r.partition_used) return out;
  auto it = r.partition_used->find(name);
  if (it == r.partition_used->end()) return out;
  const int n = r.sequence.n();
  for (int d : it->second) out.push_back(r.via_complement ? n - 1 - d : d);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// The classes guaranteed to hold a completable vertex, in priority order,
/// and why. Empty when the verdict names no such classes.
std::pair<std::vector<int>, std::string> guaranteed_classes(const DegreeSequence& target,
                                                            const ForcingVerdict& verdict) {
  const std::string& id = verdict.rule;
  const bool names_vertex = id == "L1.1" || id == "L1.2" || id == "L1.4" || id.starts_with("L6");
  if (!names_vertex) return {};
  const RuleReport r = apply_catalog(target);
  if (r.fired_rule != id) return {};
  if (id.starts_with("L6")) {
    std::vector<int> degs = role_degrees(r, "uv");
    if (degs.empty()) {
      degs = role_degrees(r, "u");
      for (int d : role_degrees(r, "v")) degs.push_back(d);
      std::sort(degs.begin(), degs.end());
    }
    return {degs, "one of the two unique vertices is completable: the lower one when they are non-adjacent"};
  }
  if (id == "L1.4") return {role_degrees(r, "v"), "deleting this degree leaves only good degrees"};
  return {role_degrees(r, "v"), "isolated or dominating vertices are always completable"};
}

}  // namespace

TemplatePlan plan_templates(const DegreeSequence& target, const ForcingVerdict& verdict) {
  if (!verdict.proved_forcing()) throw Error(ErrorCode::NotForcing, target.to_string() + " is not proved forcing");
  if (!is_graphic(target)) throw Error(ErrorCode::NotGraphic, target.to_string() + " is not graphic");
  TemplatePlan plan;
  plan.target = target;
  const auto cls = class_counts(target);
  if (cls.empty()) return plan;

  auto [order, why] = guaranteed_classes(target, verdict);
  if (cls.size() == 1) {
    order = {cls[0].degree};
    why = "regular: every vertex is completable";
  } else if (all_degrees_good(target)) {
    // Every vertex is completable; the smallest class keeps the
    // canonical-deletion check cheapest.
    auto best = std::min_element(cls.begin(), cls.end(),
                                 [](const auto& a, const auto& b) { return a.count < b.count; });
    order = {best->degree};
    why = "no two degrees differ by one: every vertex is completable";
  } else if (order.empty()) {
    // Forcing alone puts a completable vertex somewhere; unique degrees
    // first since their deletions need no canonical check.
    std::vector<DegreeClassCount> sorted = cls;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.count < b.count; });
    for (const auto& c : sorted) order.push_back(c.degree);
    why = "every realization has a completable vertex in some class";
  }
  plan.class_order = order;
  plan.rationale = why;

  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const std::size_t x = class_index(cls, order[pos]);
    const std::string role = cls[x].count == 1 ? "unique vertex of degree " + std::to_string(cls[x].degree)
                                               : "a vertex of degree " + std::to_string(cls[x].degree);
    const std::string reason = pos == 0 ? "completable deletion; unique completion"
                                        : "completable deletion when no earlier class is completable";
    for (const auto& k : selections(cls, x, true))
      if (auto t = make_deletion(cls, x, k, role, reason)) plan.deletions.push_back(std::move(*t));
  }
  return plan;
}

namespace {

VertexMask vertices_of_degree(const Graph& g, int d) {
  VertexMask m = 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == d) m |= VertexMask{1} << v;
  return m;
}

/// Result of completing one template realization.
struct Completed {
  std::optional<Graph> graph;  // set iff accepted
  std::exception_ptr error;
};

/// Completes `card` and keeps the result only if its new vertex is the
/// canonical deletion: no earlier class has a completable vertex and, within
/// a class of several vertices, the card matches the one obtained by deleting
/// the completable vertex with the least canonical label.
Completed complete_one(const Graph& card, const TemplatePlan& plan, std::size_t class_pos, int class_size) {
  Completed out;
  try {
    auto oc = complete_card({card, plan.target});
    if (oc.status == CompletionStatus::Infeasible) return out;
    if (oc.status == CompletionStatus::Ambiguous || oc.completions.size() != 1)
      throw Error(ErrorCode::CompletionContradiction, "planned card has several completions");
    Graph g = std::move(oc.completions.front().result);
    const int x = card.n();
    const VertexMask cm = completable_vertices(g);
    if (!((cm >> x) & 1U)) throw Error(ErrorCode::CompletionContradiction, "planned deletion is not completable");
    for (std::size_t p = 0; p < class_pos; ++p)
      if (cm & vertices_of_degree(g, plan.class_order[p])) return out;
    if (class_size > 1) {
      const VertexMask cand = cm & vertices_of_degree(g, plan.class_order[class_pos]);
      const auto cf = canonical_form(g);
      int best = x;
      for_each_vertex(cand, [&](int v) {
        if (cf.labelling[v] < cf.labelling[best]) best = v;
      });
      if (best != x && certificate(delete_vertex(g, best)) != certificate(card)) return out;
    }
    out.graph = std::move(g);
  } catch (...) {
    out.error = std::current_exception();
  }
  return out;
}

std::vector<Completed> complete_all(const std::vector<Graph>& cards, const TemplatePlan& plan, std::size_t class_pos,
                                    int class_size, int jobs) {
  std::vector<Completed> out(cards.size());
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(cards.size())));
  auto run = [&](int w) {
    for (std::size_t i = w; i < cards.size(); i += workers) out[i] = complete_one(cards[i], plan, class_pos, class_size);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  return out;
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Completions of every card of every neighbour-degree selection of the
/// first planned class, with no dedup.
long naive_count(const TemplatePlan& plan) {
  const auto cls = class_counts(plan.target);
  const std::size_t x = class_index(cls, plan.class_order.front());
  long total = 0;
  for (const auto& k : selections(cls, x, false)) {
    const auto t = make_deletion(cls, x, k, "", "");
    if (!t || !t->graphic) continue;
    enumerate_realizations(t->sequence, [&](const Graph& card) {
      const auto oc = complete_card({card, plan.target}, false);
      if (oc.status == CompletionStatus::Infeasible) return true;
      long ways = 1;
      for (const auto& g : oc.groups) ways *= binomial(g.size, g.neighbours);
      total += ways;
      return true;
    });
  }
  return total;
}

}  // namespace

GenerateStats generate_from_plan(const TemplatePlan& plan, const std::function<void(const Graph&)>& visit,
                                 GenerateOptions options) {
  GenerateStats stats;
  const int jobs = options.jobs > 0 ? options.jobs : std::max(1U, std::thread::hardware_concurrency());
  const auto cls = class_counts(plan.target);
  std::unordered_set<std::string> seen;
  std::vector<std::pair<std::string, Graph>> held;

  auto emit = [&](Graph&& g) {
    ++stats.emitted;
    if (options.verify) {
      if (g.degree_sequence() != plan.target || !seen.insert(certificate(g)).second) ++stats.collisions;
    }
    if (options.deterministic)
      held.emplace_back(certificate(g), std::move(g));
    else
      visit(g);
  };

  for (const auto& t : plan.deletions) {
    TemplateStats ts;
    ts.sequence = t.sequence;
    if (t.sequence.n() == 0) {
      // The empty card completes to the single vertex.
      ts.realizations = ts.emitted = 1;
      emit(Graph(1));
    } else if (t.graphic) {
      const auto pos = static_cast<std::size_t>(
          std::find(plan.class_order.begin(), plan.class_order.end(), t.deleted_degree) - plan.class_order.begin());
      const int size = cls[class_index(cls, t.deleted_degree)].count;
      const auto cards = realizations(t.sequence);
      ts.realizations = static_cast<long>(cards.size());
      for (auto& c : complete_all(cards, plan, pos, size, jobs)) {
        if (c.error) std::rethrow_exception(c.error);
        if (!c.graph) {
          ++ts.rejected;
          continue;
        }
        ++ts.emitted;
        emit(std::move(*c.graph));
      }
    }
    stats.templates.push_back(std::move(ts));
  }

  if (options.deterministic) {
    std::sort(held.begin(), held.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [cert, g] : held) visit(g);
  }
  if (options.baseline && !plan.class_order.empty() && plan.target.n() > 1) stats.baseline = naive_count(plan);
  return stats;
}

GenerateStats generate_accelerated(const DegreeSequence& target, const std::function<void(const Graph&)>& visit,
                                   GenerateOptions options) {
  if (!is_graphic(target)) throw Error(ErrorCode::NotGraphic, target.to_string() + " is not graphic");
  ForcingVerdict verdict = apply_catalog(target).verdict;
  if (!verdict.proved_forcing()) verdict = is_forcing_oracle(target);
  const TemplatePlan plan = plan_templates(target, verdict);
  GenerateStats stats = generate_from_plan(plan, visit, options);
  stats.verdict = verdict;
  return stats;
}

}  // namespace dsr
