#include <doctest.h>

#include <set>

#include "brute.hpp"
#include "dsr/canonical.hpp"
#include "dsr/completability.hpp"
#include "dsr/enumeration.hpp"
#include "dsr/error.hpp"

using namespace dsr;

namespace {

long count_realizations(const DegreeSequence& s) {
  long k = 0;
  enumerate_realizations(s, [&](const Graph&) {
    ++k;
    return true;
  });
  return k;
}

}  // namespace

TEST_CASE("realization counts") {
  CHECK(count_realizations(DegreeSequence({2, 2, 2})) == 1);
  CHECK(count_realizations(DegreeSequence({2, 2, 3, 5, 5, 5, 5, 5, 6})) == 119);
  CHECK(count_realizations(DegreeSequence({2, 3, 3, 3, 5, 5, 5, 5, 5, 6})) == 4930);
}

TEST_CASE("realizations are pairwise non-isomorphic and realize the sequence") {
  for (const auto& s : graphic_sequences(7)) {
    std::set<std::string> certs;
    enumerate_realizations(s, [&](const Graph& g) {
      CHECK(g.degree_sequence() == s);
      CHECK(certs.insert(certificate(g)).second);
      return true;
    });
  }
}

TEST_CASE("enumeration matches labelled brute force per sequence, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::vector<int>, long> expected;
    for (const auto& [key, g] : brute::classes(n)) ++expected[brute::sorted_degrees(g)];
    for (const auto& s : graphic_sequences(n)) CHECK(count_realizations(s) == expected[s.degrees()]);
  }
}

TEST_CASE("generation totals") {
  long total7 = 0;
  for (const auto& s : graphic_sequences(7)) total7 += count_realizations(s);
  CHECK(total7 == 1044);
  long total6 = 0;
  for (const auto& s : graphic_sequences(6)) total6 += count_realizations(s);
  CHECK(total6 == 156);
}

TEST_CASE("enumeration rejects non-graphic input") {
  try {
    enumerate_realizations(DegreeSequence({1, 1, 1}), [](const Graph&) { return true; });
    FAIL("expected NotGraphic");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotGraphic);
  }
}

TEST_CASE("forcing oracle") {
  CHECK(is_forcing_oracle(DegreeSequence({3, 3, 3, 3, 3, 3, 4})).proved_forcing());
  const auto v = is_forcing_oracle(DegreeSequence({1, 1, 2, 2, 3, 3}));
  REQUIRE(v.proved_not_forcing());
  REQUIRE(v.witness);
  CHECK(v.witness->degree_sequence() == DegreeSequence({1, 1, 2, 2, 3, 3}));
  CHECK_FALSE(is_ds_reconstructible(*v.witness));
  long forcing6 = 0;
  for (const auto& s : graphic_sequences(6)) forcing6 += is_forcing_oracle(s).proved_forcing();
  CHECK(forcing6 == 88);
}

TEST_CASE("forcing is complement invariant, n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& s : graphic_sequences(n))
      CHECK(is_forcing_oracle(s).proved_forcing() == is_forcing_oracle(complement_sequence(s)).proved_forcing());
}

TEST_CASE("switching walk") {
  const auto found = switching_walk(DegreeSequence({1, 1, 2, 2, 3, 3}), 10000, 1);
  REQUIRE(found.proved_not_forcing());
  CHECK_FALSE(is_ds_reconstructible(*found.witness));
  CHECK(switching_walk(DegreeSequence({3, 3, 3, 3}), 1000, 1).is_unknown());
  // Same seed, same answer.
  const auto again = switching_walk(DegreeSequence({1, 1, 2, 2, 3, 3}), 10000, 1);
  CHECK(write_graph6(*again.witness) == write_graph6(*found.witness));
}

TEST_CASE("switching walk never contradicts the oracle, n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& s : graphic_sequences(n)) {
      const auto walk = switching_walk(s, 200, 42);
      CHECK_FALSE(walk.proved_forcing());
      if (walk.proved_not_forcing()) {
        CHECK_FALSE(is_forcing_oracle(s).proved_forcing());
        CHECK(walk.witness->degree_sequence() == s);
        CHECK_FALSE(is_ds_reconstructible(*walk.witness));
      }
    }
}

TEST_CASE("census rows agree with labelled brute force, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const auto b = brute::census(n);
    const auto r = census(n);
    CHECK(r.num_sequences == b.sequences);
    CHECK(r.num_forcing_sequences == b.forcing);
    CHECK(r.num_graphs == b.graphs);
    CHECK(r.num_ds_reconstructible == b.dsr);
    CHECK(r.num_forced_graphs == b.forced);
    CHECK(r.num_weakly == b.weak);
    CHECK(r.num_good_sequences == b.good_sequences);
    CHECK(r.num_good_graphs == b.good_graphs);
  }
}

TEST_CASE("census rows") {
  CHECK(census(1) == CensusRow{1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(census(6) == CensusRow{6, 102, 88, 156, 128, 106, 152, 30, 34});
  const auto r7 = census(7, 0);
  CHECK(r7.num_graphs == 1044);
  CHECK(r7.num_forced_graphs <= r7.num_ds_reconstructible);
  CHECK(r7.num_ds_reconstructible <= r7.num_weakly);
  CHECK(r7.num_weakly <= r7.num_graphs);
  CHECK(census(7, 1) == r7);
}

TEST_CASE("all-good sequences have every vertex completable, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    long good = 0;
    for (const auto& s : graphic_sequences(n)) {
      if (!all_degrees_good(s)) continue;
      ++good;
      for (const auto& g : realizations(s)) CHECK(completable_vertices(g) == low_mask(n));
    }
    CHECK(good == census(n).num_good_sequences);
  }
}
