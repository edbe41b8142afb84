#include <doctest.h>

#include <algorithm>
#include <set>

#include "liebranch/golden.hpp"
#include "liebranch/semigroup.hpp"
#include "oracles.hpp"

using namespace liebranch;

namespace {

const std::vector<LatticePoint> kNine{{0, 2}, {0, 17}, {4, 0}, {6, 0}, {15, 0}, {5, 1}, {1, 3}, {7, 1}, {1, 6}};
const std::vector<LatticePoint> kSix{{0, 2}, {0, 17}, {4, 0}, {15, 0}, {5, 1}, {1, 3}};

}  // namespace

TEST_CASE("generator validation") {
  CHECK_THROWS_AS(GeneratorSet({}), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSet({{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSet({{1, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSet({{1, 0}, {1}}), std::invalid_argument);
  const GeneratorSet gs(kNine);
  CHECK(gs.dim() == 2);
  CHECK(gs.max_entry() == 17);
  CHECK(gs.has_axis_generators());
  CHECK(!GeneratorSet({{1, 1}, {2, 0}}).has_axis_generators());
}

TEST_CASE("membership examples") {
  const GeneratorSet nine(kNine);
  const std::vector<std::int64_t> zero{0, 0}, one_zero{1, 0}, four_zero{4, 0}, mixed{6, 4};
  CHECK(member(nine, zero));
  CHECK(!member(nine, one_zero));
  CHECK(member(nine, four_zero));
  CHECK(member(nine, mixed));  // (5,1) + (1,3)
  const std::vector<std::int64_t> negative{-1, 0};
  CHECK_THROWS_AS(member(nine, negative), std::invalid_argument);
}

TEST_CASE("membership agrees with breadth-first closure") {
  for (const auto& gens : {kNine, kSix, std::vector<LatticePoint>{{3, 0}, {0, 5}, {2, 2}, {1, 4}}}) {
    const GeneratorSet gs(gens);
    const auto closed = oracle::closure(gens, 40);
    for (std::int64_t a = 0; a <= 40; ++a)
      for (std::int64_t b = 0; b <= 40; ++b) {
        const std::vector<std::int64_t> v{a, b};
        CHECK(member(gs, v) == (closed.count(v) == 1));
      }
  }
}

TEST_CASE("complement examples") {
  const auto r1 = complement(GeneratorSet({{2}, {3}}), 10);
  CHECK(r1.points == std::vector<LatticePoint>{{1}});
  CHECK(r1.certified);
  CHECK(r1.box_bound == 10);

  const auto nine = complement(GeneratorSet(kNine), kDefaultBoxBound);
  CHECK(nine.certified);
  CHECK(nine.points.size() == 73);
  CHECK(nine.points == golden::nine_generator_complement());
  CHECK(std::is_sorted(nine.points.begin(), nine.points.end()));

  const auto six = complement(GeneratorSet(kSix), kDefaultBoxBound);
  CHECK(six.certified);
  CHECK(six.points.size() == 194);

  CHECK_THROWS_AS(complement(GeneratorSet({{1, 1}, {2, 0}}), 10), std::invalid_argument);
  // An infinite complement is never certified.
  CHECK(!complement(GeneratorSet({{2, 0}, {0, 3}, {1, 1}}), 30).certified);
  // A box smaller than the generators cannot be certified.
  CHECK(!complement(GeneratorSet(kNine), 20).certified);
}

TEST_CASE("complement soundness") {
  for (const auto& gens : {kNine, kSix}) {
    const GeneratorSet gs(gens);
    const auto result = complement(gs, kDefaultBoxBound);
    const std::set<LatticePoint> listed(result.points.begin(), result.points.end());
    for (const auto& p : result.points) CHECK(!member(gs, p));
    oracle::Rng rng(77);
    int sampled = 0;
    while (sampled < 1000) {
      const LatticePoint v{rng.uniform(0, kDefaultBoxBound), rng.uniform(0, kDefaultBoxBound)};
      if (listed.count(v)) continue;
      CHECK(member(gs, v));
      ++sampled;
    }
    // A certified complement is stable under enlarging the box.
    CHECK(complement(gs, 2 * kDefaultBoxBound).points == result.points);
    // Generator absorption.
    for (const auto& g : gens)
      for (std::int64_t a = 0; a <= 20; ++a)
        for (std::int64_t b = 0; b <= 20; ++b) {
          const LatticePoint v{a, b};
          if (member(gs, v)) CHECK(member(gs, LatticePoint{a + g[0], b + g[1]}));
        }
  }
}

TEST_CASE("three-dimensional complement") {
  const std::vector<LatticePoint> gens{{2, 0, 0}, {3, 0, 0}, {0, 2, 0}, {0, 3, 0}, {0, 0, 2},
                                       {0, 0, 3}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  const auto r = complement(GeneratorSet(gens), 12);
  CHECK(r.certified);
  const auto closed = oracle::closure(gens, 12);
  std::vector<LatticePoint> expected;
  for (std::int64_t a = 0; a <= 12; ++a)
    for (std::int64_t b = 0; b <= 12; ++b)
      for (std::int64_t c = 0; c <= 12; ++c)
        if (!closed.count({a, b, c})) expected.push_back({a, b, c});
  CHECK(r.points == expected);
  CHECK(!r.points.empty());
}
