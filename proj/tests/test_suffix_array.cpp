////////////////////////////////////////////////////////////////////////////////
// test_suffix_array.cpp
////////////////////////////////////////////////////////////////////////////////

#include "lzscan/suffix_array.hpp"

#include <random>

#include "doctest.h"
#include "test_support.hpp"

using test_support::Bytes;
using test_support::bytes_of;

TEST_CASE("suffix array of banana") {
  const Bytes b = bytes_of("banana");
  const auto sa = lzscan::build_suffix_array(b);
  CHECK(sa == std::vector<std::int32_t>{6, 5, 3, 1, 0, 4, 2});
  const auto lcp = lzscan::build_lcp_array(b, sa);
  CHECK(lcp == std::vector<std::int32_t>{0, 0, 1, 3, 0, 0, 2});
}

TEST_CASE("suffix array of a single symbol") {
  const Bytes b = bytes_of("a");
  const auto sa = lzscan::build_suffix_array(b);
  CHECK(sa == std::vector<std::int32_t>{1, 0});
  const auto lcp = lzscan::build_lcp_array(b, sa);
  CHECK(lcp == std::vector<std::int32_t>{0, 0});
}

TEST_CASE("suffix array matches brute-force sort on random strings") {
  std::mt19937 rng(20240701);
  for (int round = 0; round < 400; ++round) {
    const int sigma = std::vector<int>{1, 2, 4, 26, 256}[round % 5];
    const std::int64_t len = 1 + rng() % 300;
    const Bytes b = test_support::random_bytes(rng, len, sigma);
    const auto sa = lzscan::build_suffix_array(b);
    CHECK(sa == test_support::brute_sa(b));
    const auto lcp = lzscan::build_lcp_array(b, sa);
    REQUIRE(lcp.size() == sa.size());
    CHECK(lcp[0] == 0);
    for (std::size_t r = 1; r < sa.size(); ++r) {
      CHECK(lcp[r] == test_support::brute_suffix_lcp(b, sa[r - 1], sa[r]));
    }
  }
}

TEST_CASE("suffix array handles deep repetition") {
  // Strings that force several rounds of recursion in the builder.
  Bytes b;
  for (int k = 0; k < 800; ++k) b.push_back("abcab"[k % 5]);
  const auto sa = lzscan::build_suffix_array(b);
  CHECK(sa == test_support::brute_sa(b));
  const auto lcp = lzscan::build_lcp_array(b, sa);
  for (std::size_t r = 1; r < sa.size(); ++r) {
    CHECK(lcp[r] == test_support::brute_suffix_lcp(b, sa[r - 1], sa[r]));
  }
}
