#include <doctest.h>

#include <algorithm>
#include <set>

#include "dsr/canonical.hpp"
#include "dsr/enumeration.hpp"
#include "dsr/error.hpp"
#include "dsr/generator.hpp"
#include "dsr/rules.hpp"

using namespace dsr;

namespace {

DegreeSequence seq(std::initializer_list<int> d) { return DegreeSequence(std::vector<int>(d)); }

std::multiset<std::string> generated(const DegreeSequence& s, GenerateOptions opt = {}) {
  std::multiset<std::string> out;
  generate_accelerated(s, [&](const Graph& g) { out.insert(certificate(g)); }, opt);
  return out;
}

std::multiset<std::string> enumerated(const DegreeSequence& s) {
  std::multiset<std::string> out;
  for (const auto& g : realizations(s)) out.insert(certificate(g));
  return out;
}

}  // namespace

TEST_CASE("two-unique-vertex plan splits on adjacency") {
  const auto target = seq({2, 3, 3, 3, 5, 5, 5, 5, 5, 6});
  const auto plan = plan_templates(target, apply_catalog(target).verdict);
  std::vector<DegreeSequence> got;
  for (const auto& t : plan.deletions) got.push_back(t.sequence);
  const std::vector<DegreeSequence> expected{
      seq({2, 2, 3, 5, 5, 5, 5, 5, 6}), seq({2, 3, 3, 4, 5, 5, 5, 5, 6}), seq({3, 3, 3, 4, 4, 5, 5, 5, 6}),
      seq({1, 2, 2, 2, 4, 4, 5, 5, 5}), seq({1, 2, 2, 3, 4, 4, 4, 5, 5}), seq({1, 2, 3, 3, 4, 4, 4, 4, 5}),
      seq({1, 3, 3, 3, 4, 4, 4, 4, 4})};
  CHECK(got == expected);
  CHECK(plan.class_order == std::vector<int>{2, 6});
  for (const auto& t : plan.deletions) CHECK(t.graphic);
  // The degree-2 deletions never touch the degree-6 vertex; the degree-6
  // deletions always touch the degree-2 vertex.
  for (const auto& t : plan.deletions) {
    bool hits_other = false;
    for (const auto& [d, k] : t.neighbour_degrees) hits_other |= d == (t.deleted_degree == 2 ? 6 : 2);
    CHECK(hits_other == (t.deleted_degree == 6));
  }
}

TEST_CASE("accelerated generation of the order-10 example") {
  const auto target = seq({2, 3, 3, 3, 5, 5, 5, 5, 5, 6});
  GenerateOptions opt;
  opt.verify = true;
  opt.baseline = true;
  opt.jobs = 0;
  long emitted = 0;
  const auto st = generate_accelerated(target, [&](const Graph& g) {
    ++emitted;
    CHECK(g.degree_sequence() == target);
  }, opt);
  std::vector<long> counts;
  for (const auto& t : st.templates) {
    counts.push_back(t.realizations);
    CHECK(t.emitted == t.realizations);
    CHECK(t.rejected == 0);
  }
  CHECK(counts == std::vector<long>{119, 1068, 1810, 88, 684, 963, 198});
  CHECK(st.emitted == 4930);
  CHECK(emitted == 4930);
  CHECK(st.collisions == 0);
  CHECK(st.baseline == 5328);
  CHECK(st.verdict.rule == "L6.1");
}

TEST_CASE("regular and tiny targets") {
  const auto plan = plan_templates(seq({2, 2, 2, 2}), ForcingVerdict::forcing("L1.3"));
  REQUIRE(plan.deletions.size() == 1);
  CHECK(plan.deletions[0].sequence == seq({1, 1, 2}));
  CHECK(generated(seq({2, 2, 2})).size() == 1);
  CHECK(generated(seq({2, 2, 2, 2})).size() == 1);
  CHECK(generated(seq({0})).size() == 1);
  CHECK(generated(seq({0, 0})).size() == 1);
}

TEST_CASE("plan errors") {
  const auto s = seq({1, 1, 2, 2, 3, 3});
  try {
    plan_templates(s, apply_catalog(s).verdict);
    FAIL("expected NotForcing");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotForcing);
  }
  try {
    generate_accelerated(s, [](const Graph&) {});
    FAIL("expected NotForcing");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotForcing);
  }
  try {
    generate_accelerated(seq({1, 1, 1}), [](const Graph&) {});
    FAIL("expected NotGraphic");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotGraphic);
  }
}

TEST_CASE("templates within a plan are distinct multisets") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& s : graphic_sequences(n)) {
      const auto v = is_forcing_oracle(s);
      if (!v.proved_forcing()) continue;
      const auto plan = plan_templates(s, v);
      std::set<std::pair<int, DegreeSequence>> seen;
      for (const auto& t : plan.deletions) CHECK(seen.emplace(t.deleted_degree, t.sequence).second);
    }
}

TEST_CASE("accelerated output equals the enumerator on every forcing sequence, n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& s : graphic_sequences(n)) {
      if (!is_forcing_oracle(s).proved_forcing()) continue;
      INFO(s.to_string());
      GenerateOptions opt;
      opt.verify = true;
      long collisions = 0;
      std::multiset<std::string> got;
      const auto st = generate_accelerated(s, [&](const Graph& g) { got.insert(certificate(g)); }, opt);
      collisions += st.collisions;
      CHECK(collisions == 0);
      CHECK(got == enumerated(s));
    }
}

TEST_CASE("deterministic mode orders by certificate and threads do not change the stream") {
  const auto target = seq({2, 3, 3, 3, 5, 5, 5, 5, 5, 6});
  std::vector<std::string> a, b, c;
  GenerateOptions one;
  GenerateOptions many;
  many.jobs = 4;
  GenerateOptions sorted;
  sorted.deterministic = true;
  sorted.jobs = 3;
  generate_accelerated(target, [&](const Graph& g) { a.push_back(write_graph6(g)); }, one);
  generate_accelerated(target, [&](const Graph& g) { b.push_back(write_graph6(g)); }, many);
  generate_accelerated(target, [&](const Graph& g) { c.push_back(certificate(g)); }, sorted);
  CHECK(a == b);
  CHECK(std::is_sorted(c.begin(), c.end()));
  CHECK(c.size() == a.size());
}
