#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "corelimit/enumeration.hpp"
#include "corelimit/numbers.hpp"

using namespace corelimit;

namespace {

std::multiset<std::uint64_t> size_multiset(const std::vector<Partition>& ps) {
  std::multiset<std::uint64_t> out;
  for (const auto& p : ps) out.insert(p.size());
  return out;
}

}  // namespace

TEST_CASE("distinct core validation") {
  CHECK_NOTHROW(DistinctCore(9, {5, 3, 2}));
  CHECK_THROWS_AS(DistinctCore(5, {3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(DistinctCore(4, {4, 1}), std::invalid_argument);  // 4 > s-k
  CHECK_THROWS_AS(DistinctCore(3, {2, 0}), std::invalid_argument);
  CHECK(DistinctCore(9, {5, 3, 2}).size() == 10);
}

TEST_CASE("indicator vectors") {
  const DistinctCore core(9, {5, 3, 2});
  const IndicatorVector v = to_indicator(core);
  CHECK(v.s == 9);
  CHECK(v.k == 3);
  CHECK(v.bits == std::vector<std::uint8_t>{0, 1, 1, 0, 1, 0});
  CHECK(from_indicator(v) == core);

  CHECK(to_indicator(DistinctCore(4, {})).bits ==
        std::vector<std::uint8_t>{0, 0, 0, 0});
  CHECK(to_indicator(DistinctCore(5, {3, 1})).bits ==
        std::vector<std::uint8_t>{1, 0, 1});

  const DistinctCore two_one = from_indicator({4, 2, {1, 1}});
  CHECK(two_one.parts() == std::vector<unsigned>{2, 1});
  CHECK(two_one.size() == 3);

  const DistinctCore empty = from_indicator({4, 0, {0, 0, 0, 0}});
  CHECK(empty.part_count() == 0);
  CHECK(empty.size() == 0);

  CHECK_THROWS_AS(from_indicator({4, 1, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(from_indicator({4, 2, {1, 1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(from_indicator({4, 1, {2, 0, 0}}), std::invalid_argument);
}

TEST_CASE("round trip and size identity over all cores, s <= 14") {
  for (unsigned s = 1; s <= 14; ++s) {
    for (const DistinctCore& core : enumerate_all(s)) {
      const IndicatorVector v = to_indicator(core);
      CHECK(from_indicator(v) == core);
      // size equals the inner product with (1, 2, ..., s-k)
      std::uint64_t inner = 0;
      for (std::size_t j = 0; j < v.bits.size(); ++j)
        inner += v.bits[j] * (j + 1);
      CHECK(core.size() == inner);
    }
  }
}

TEST_CASE("fixed-k enumeration") {
  const auto cores = enumerate_fixed_k(5, 2);
  REQUIRE(cores.size() == 3);
  // lexicographic as subsets: {1,2}, {1,3}, {2,3}
  CHECK(cores[0].parts() == std::vector<unsigned>{2, 1});
  CHECK(cores[1].parts() == std::vector<unsigned>{3, 1});
  CHECK(cores[2].parts() == std::vector<unsigned>{3, 2});

  const auto singleton = enumerate_fixed_k(4, 0);
  REQUIRE(singleton.size() == 1);
  CHECK(singleton[0].part_count() == 0);

  CHECK(enumerate_fixed_k(9, 3).size() == 20);  // C(6,3)
  CHECK(enumerate_fixed_k(5, 3).empty());       // k > s/2
}

TEST_CASE("census counts match binomials and Fibonacci, s <= 20") {
  for (unsigned s = 1; s <= 20; ++s) {
    BigInt total = 0;
    for (unsigned k = 0; 2 * k <= s; ++k) {
      const auto block = enumerate_fixed_k(s, k);
      CHECK(BigInt(block.size()) == binomial(s - k, k));
      total += block.size();
    }
    CHECK(total == fibonacci(s + 1));
    CHECK(BigInt(enumerate_all(s).size()) == fibonacci(s + 1));
  }
  CHECK(enumerate_all(10).size() == 89);
  CHECK(enumerate_all(1).size() == 1);
}

TEST_CASE("enumerated cores are honest cores") {
  for (unsigned s = 1; s <= 14; ++s) {
    for (const DistinctCore& core : enumerate_all(s)) {
      const Partition p = core.to_partition();
      CHECK(p.distinct_parts());
      CHECK(is_st_core(p, s, s + 1));
    }
  }
}

TEST_CASE("brute-force (3,5) census") {
  const auto cores = brute_force_st_cores(3, 5, 24);
  REQUIRE(cores.size() == 7);
  CHECK(size_multiset(cores) ==
        std::multiset<std::uint64_t>{0, 1, 2, 2, 4, 4, 8});
  const std::set<std::vector<unsigned>> parts_seen = [&] {
    std::set<std::vector<unsigned>> out;
    for (const auto& p : cores) out.insert(p.parts());
    return out;
  }();
  const std::set<std::vector<unsigned>> expected{
      {}, {1}, {2}, {1, 1}, {3, 1}, {2, 1, 1}, {4, 2, 1, 1}};
  CHECK(parts_seen == expected);
}

TEST_CASE("brute-force edge cases") {
  const auto trivial = brute_force_st_cores(1, 2, 10);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].empty());

  const auto small = brute_force_st_cores(2, 3, 10);
  CHECK(size_multiset(small) == std::multiset<std::uint64_t>{0, 1});

  CHECK_THROWS_WITH_AS(brute_force_st_cores(2, 4, 10),
                       "infinitely many cores", std::invalid_argument);
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
  for (unsigned s = 1; s <= 10; ++s) {
    // a distinct-part core is a k-subset of {1..s-k}, so its size is at most
    // max_k k(2s-3k+1)/2 <= (2s+1)^2/24
    const std::uint64_t cap =
        std::uint64_t(2 * s + 1) * (2 * s + 1) / 24 + 1;
    std::multiset<std::vector<unsigned>> brute;
    for (const Partition& p : brute_force_st_cores(s, s + 1, cap))
      if (p.distinct_parts()) brute.insert(p.parts());
    std::multiset<std::vector<unsigned>> enumerated;
    for (const DistinctCore& c : enumerate_all(s)) enumerated.insert(c.parts());
    CHECK(brute == enumerated);
  }
}
