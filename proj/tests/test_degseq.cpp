#include <doctest.h>

#include <random>
#include <set>

#include "brute.hpp"
#include "dsr/degseq.hpp"
#include "dsr/enumeration.hpp"
#include "dsr/error.hpp"

using namespace dsr;

namespace {

std::vector<int> degrees_of(const std::vector<DegreeClass>& cls, bool DegreeClass::*flag) {
  std::vector<int> out;
  for (const auto& c : cls)
    if (c.*flag) out.push_back(c.degree);
  return out;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::MalformedToken;
}

}  // namespace

TEST_CASE("parse accepts comma, space and compact notation") {
  const auto s = DegreeSequence::parse("2,3,3,3,5,5,5,5,5,6");
  CHECK(s.n() == 10);
  CHECK(s.m2() == 42);
  CHECK(DegreeSequence::parse("2333555556") == s);
  CHECK(DegreeSequence::parse("[2 3 3 3 5 5 5 5 5 6]") == s);
  CHECK(DegreeSequence::parse("2,1,1").degrees() == std::vector<int>{1, 1, 2});
  CHECK(s.to_string() == "2,3,3,3,5,5,5,5,5,6");
}

TEST_CASE("parse rejects malformed input") {
  CHECK(code_of([] { DegreeSequence::parse(""); }) == ErrorCode::MalformedToken);
  CHECK(code_of([] { DegreeSequence::parse("1,x,2"); }) == ErrorCode::MalformedToken);
  CHECK(code_of([] { DegreeSequence::parse("1,-1"); }) == ErrorCode::MalformedToken);
  CHECK(code_of([] { DegreeSequence::parse("3,3,3"); }) == ErrorCode::DegreeOutOfRange);
}

TEST_CASE("is_graphic on named cases") {
  CHECK(is_graphic(DegreeSequence({1, 1, 1, 1, 2, 2, 3, 5})));
  CHECK(is_graphic(DegreeSequence({0})));
  CHECK_FALSE(is_graphic(std::vector<int>{3, 3, 3}));
  CHECK_FALSE(is_graphic(DegreeSequence({1, 1, 1})));
}

TEST_CASE("is_graphic agrees with labelled-graph brute force for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> realized;
    const std::uint64_t limit = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t m = 0; m < limit; ++m) realized.insert(brute::sorted_degrees(brute::from_mask(n, m)));
    std::vector<int> d(n, 0);
    long graphic = 0;
    // Every non-descending sequence with entries below n.
    auto rec = [&](auto&& self, int i, int lo) -> void {
      if (i == n) {
        CHECK(is_graphic(d) == realized.contains(d));
        graphic += is_graphic(d);
        return;
      }
      for (int v = lo; v < n; ++v) {
        d[i] = v;
        self(self, i + 1, v);
      }
    };
    rec(rec, 0, 0);
    CHECK(graphic == static_cast<long>(realized.size()));
    CHECK(graphic_sequences(n).size() == realized.size());
  }
}

TEST_CASE("complement_sequence") {
  CHECK(complement_sequence(DegreeSequence({1, 1, 2, 2, 3, 3})) == DegreeSequence({2, 2, 3, 3, 4, 4}));
  CHECK(complement_sequence(DegreeSequence({3, 3, 3, 3})) == DegreeSequence({0, 0, 0, 0}));
}

TEST_CASE("complement_sequence is an involution preserving graphicness, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& s : graphic_sequences(n)) {
      const auto c = complement_sequence(s);
      CHECK(is_graphic(c));
      CHECK(complement_sequence(c) == s);
    }
  }
}

TEST_CASE("bad in s iff the mirrored degree is dull in the complement") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& s : graphic_sequences(n)) {
      const auto cs = classify_degrees(s);
      const auto cc = classify_degrees(complement_sequence(s));
      for (const auto& c : cs) {
        const int mirror = n - 1 - c.degree;
        auto it = std::find_if(cc.begin(), cc.end(), [&](const DegreeClass& x) { return x.degree == mirror; });
        REQUIRE(it != cc.end());
        CHECK(c.is_bad == it->is_dull);
        CHECK(c.is_dull == it->is_bad);
      }
    }
  }
}

TEST_CASE("classify_degrees") {
  const auto cls = classify_degrees(DegreeSequence({2, 2, 3, 3, 3, 5, 5, 7, 7, 8, 9}));
  CHECK(degrees_of(cls, &DegreeClass::is_bad) == std::vector<int>{3, 8, 9});
  CHECK(degrees_of(cls, &DegreeClass::is_dull) == std::vector<int>{2, 7, 8});
  const auto reg = classify_degrees(DegreeSequence({3, 3, 3, 3}));
  CHECK(degrees_of(reg, &DegreeClass::is_bad).empty());
  CHECK(degrees_of(reg, &DegreeClass::is_dull).empty());
  const auto pair = classify_degrees(DegreeSequence({1, 1, 2}));
  CHECK(degrees_of(pair, &DegreeClass::is_bad) == std::vector<int>{2});
  CHECK(degrees_of(pair, &DegreeClass::is_dull) == std::vector<int>{1});
}

TEST_CASE("all_degrees_good") {
  CHECK_FALSE(all_degrees_good(DegreeSequence({2, 2, 2, 4, 4, 4, 5, 6, 6, 9})));
  CHECK(all_degrees_good(DegreeSequence({3, 3, 3, 3, 3, 3})));
  CHECK(all_degrees_good(DegreeSequence({1, 1, 3, 3, 3, 3})));
}

TEST_CASE("neighbourly and d-neighbourly sets") {
  // {3,4,4,5} with 2s outside: not neighbourly, but 3-neighbourly.
  const SequenceProfile p(DegreeSequence({2, 2, 3, 4, 4, 5, 6, 6}));
  const ClassSet set = p.of_degree(3) | p.of_degree(4) | p.of_degree(5);
  CHECK_FALSE(p.neighbourly(set));
  CHECK(p.d_neighbourly(set, 3));
  CHECK_FALSE(p.d_neighbourly(set, 4));
  CHECK(p.neighbourly(ClassSet{}));
  CHECK(p.neighbourly(p.dull()));
  CHECK(p.neighbourly(p.dull() | p.of_degree(6)));

  PartitionView view(p);
  view.assign("k", set);
  CHECK(view.is_d_neighbourly("k", 3));
  CHECK_FALSE(view.is_neighbourly("k"));
  CHECK(view.n_i("k") == 4);
  CHECK(view.m_i("k") == 16);
  CHECK(view.xi("k") == 3);
  CHECK_THROWS_AS(view.assign("overlap", p.of_degree(4)), std::invalid_argument);
}

TEST_CASE("chi never exceeds n_i n_j on random partitions") {
  std::mt19937_64 rng(20261015);
  int checked = 0;
  for (int n = 2; n <= 10; ++n) {
    const auto seqs = graphic_sequences(n);
    for (int trial = 0; trial < 60; ++trial) {
      const SequenceProfile p(seqs[rng() % seqs.size()]);
      // Random assignment of classes to three roles.
      ClassSet roles[3];
      for (int c = 0; c < p.num_classes(); ++c) {
        auto& r = roles[rng() % 3];
        r = r | ClassSet::single(c);
      }
      for (const auto& i : roles)
        for (const auto& j : roles) {
          CHECK(p.chi(i, j) <= p.size(i) * p.size(j));
          ++checked;
        }
    }
  }
  CHECK(checked > 0);
}
