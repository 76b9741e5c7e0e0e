////////////////////////////////////////////////////////////////////////////////
// test_ms_invert.cpp
////////////////////////////////////////////////////////////////////////////////

#include "lzscan/ms_invert.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "lzscan/oracle.hpp"
#include "test_support.hpp"

using lzscan::BitVector;
using lzscan::BlockIndex;
using lzscan::InvertState;
using lzscan::MsEntry;
using lzscan::MsMode;
using lzscan::MsScanOptions;
using lzscan::ScanStart;
using test_support::Bytes;
using test_support::bytes_of;

namespace {

// Longest match of block[j..] starting at a prefix position, by direct
// comparison over the whole text; matches may run past the prefix end.
std::vector<MsEntry> brute_inverted(const Bytes& text, std::int64_t prefix,
                                    std::int64_t block_begin) {
  const std::int64_t n = static_cast<std::int64_t>(text.size());
  std::vector<MsEntry> want(n - block_begin);
  for (std::int64_t j = block_begin; j < n; ++j) {
    for (std::int64_t i = 0; i < prefix; ++i) {
      std::int64_t l = 0;
      while (j + l < n && text[i + l] == text[j + l]) ++l;
      if (l > want[j - block_begin].len) want[j - block_begin] = {i, l};
    }
  }
  return want;
}

std::vector<MsEntry> scan_and_invert(const Bytes& text, std::int64_t prefix,
                                     const BlockIndex& idx, MsMode mode,
                                     ScanStart start) {
  InvertState inv(static_cast<std::int64_t>(idx.block().size()));
  MsScanOptions opts;
  opts.mode = mode;
  opts.start = start;
  const BitVector marks(static_cast<std::int64_t>(text.size()));
  lzscan::ms_scan(idx, text, prefix, marks, opts,
                  [&](std::int64_t i, const MsEntry& e) {
                    inv.accumulate(i, e);
                  });
  return inv.finalize(idx);
}

}  // namespace

TEST_CASE("inversion of a hand scan") {
  // Prefix "nab", block "ana": the scan sees matches of prefix suffixes
  // into the block, finalize turns them into matches per block position.
  const Bytes text = bytes_of("nabana");
  const Bytes block = bytes_of("ana");
  const BlockIndex idx(block);

  for (const MsMode mode : {MsMode::kStandard, MsMode::kOnePosition}) {
    const auto got = scan_and_invert(text, 3, idx, mode, ScanStart::kEmpty);
    REQUIRE(got.size() == 3);
    CHECK(got[0] == MsEntry{1, 1});  // "a" of "ab"
    CHECK(got[1] == MsEntry{0, 2});  // "na" of "nab"
    CHECK(got[2] == MsEntry{1, 1});
  }
}

TEST_CASE("inversion from direct accumulation") {
  const Bytes block = bytes_of("ana");
  const BlockIndex idx(block);
  InvertState inv(3);
  // The entries the scan of "nab" produces, fed by hand.
  inv.accumulate(1, {2, 1});
  inv.accumulate(0, {1, 2});
  const auto got = inv.finalize(idx);
  REQUIRE(got.size() == 3);
  CHECK(got[0] == MsEntry{1, 1});
  CHECK(got[1] == MsEntry{0, 2});
  CHECK(got[2] == MsEntry{1, 1});
}

TEST_CASE("empty entries never accumulate") {
  const Bytes block = bytes_of("abc");
  const BlockIndex idx(block);
  InvertState inv(3);
  inv.accumulate(0, {-1, 0});
  inv.accumulate(5, {-1, 0});
  const auto got = inv.finalize(idx);
  for (const MsEntry& e : got) CHECK(e == MsEntry{-1, 0});
}

TEST_CASE("single symbol prefix and block") {
  const Bytes text = bytes_of("aa");
  const Bytes block = bytes_of("a");
  const BlockIndex idx(block);
  const auto got =
      scan_and_invert(text, 1, idx, MsMode::kStandard, ScanStart::kEmpty);
  REQUIRE(got.size() == 1);
  CHECK(got[0] == MsEntry{0, 1});
}

TEST_CASE("disjoint alphabets invert to nothing") {
  const Bytes text = bytes_of("xyzabc");
  const Bytes block = bytes_of("abc");
  const BlockIndex idx(block);
  for (const MsMode mode : {MsMode::kStandard, MsMode::kOnePosition}) {
    const auto got = scan_and_invert(text, 3, idx, mode, ScanStart::kEmpty);
    for (const MsEntry& e : got) CHECK(e.len == 0);
  }
}

TEST_CASE("inverted scan equals the direct definition") {
  std::mt19937 rng(31337);
  for (int round = 0; round < 200; ++round) {
    const int sigma = std::vector<int>{1, 2, 3, 4}[round % 4];
    const std::int64_t n = 8 + rng() % 72;
    const Bytes text = test_support::random_bytes(rng, n, sigma);
    const std::int64_t prefix = 1 + rng() % (n - 1);
    const Bytes block(text.begin() + prefix, text.end());
    const BlockIndex idx(block);

    // Standalone start: matches confined to the prefix on both sides.
    const auto standalone = lzscan::brute_ms(
        block, Bytes(text.begin(), text.begin() + prefix));
    // Block start: matches may continue from the prefix into the block.
    const auto through = brute_inverted(text, prefix, prefix);

    for (const MsMode mode : {MsMode::kStandard, MsMode::kOnePosition}) {
      const auto got_sa =
          scan_and_invert(text, prefix, idx, mode, ScanStart::kEmpty);
      const auto got_bl =
          scan_and_invert(text, prefix, idx, mode, ScanStart::kBlock);
      REQUIRE(got_sa.size() == standalone.size());
      REQUIRE(got_bl.size() == through.size());
      for (std::size_t j = 0; j < got_sa.size(); ++j) {
        REQUIRE(got_sa[j].len == standalone[j].len);
        REQUIRE(got_bl[j].len == through[j].len);
        // Witnesses: a text position before the prefix end matching the
        // block suffix for the reported length.
        for (const auto* pair :
             {&got_sa[j], &got_bl[j]}) {
          if (pair->len == 0) continue;
          REQUIRE(pair->pos >= 0);
          REQUIRE(pair->pos < prefix);
          for (std::int64_t k = 0; k < pair->len; ++k) {
            CHECK(text[pair->pos + k] == block[j + k]);
          }
        }
        if (got_sa[j].len > 0) {
          CHECK(got_sa[j].pos + got_sa[j].len <= prefix);
        }
      }
    }
  }
}

TEST_CASE("accumulation order does not matter") {
  std::mt19937 rng(31338);
  for (int round = 0; round < 50; ++round) {
    const std::int64_t n = 8 + rng() % 40;
    const Bytes text = test_support::random_bytes(rng, n, 2);
    const std::int64_t prefix = 1 + rng() % (n - 1);
    const Bytes block(text.begin() + prefix, text.end());
    const BlockIndex idx(block);

    std::vector<std::pair<std::int64_t, MsEntry>> entries;
    {
      MsScanOptions opts;
      opts.mode = MsMode::kStandard;
      opts.start = ScanStart::kBlock;
      const BitVector marks(n);
      lzscan::ms_scan(idx, text, prefix, marks, opts,
                      [&](std::int64_t i, const MsEntry& e) {
                        entries.emplace_back(i, e);
                      });
    }
    InvertState in_order(static_cast<std::int64_t>(block.size()));
    for (const auto& [i, e] : entries) in_order.accumulate(i, e);
    std::shuffle(entries.begin(), entries.end(), rng);
    InvertState shuffled(static_cast<std::int64_t>(block.size()));
    for (const auto& [i, e] : entries) shuffled.accumulate(i, e);

    const auto a = in_order.finalize(idx);
    const auto b = shuffled.finalize(idx);
    REQUIRE(a.size() == b.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
      CHECK(a[j].len == b[j].len);  // winners of ties may differ
      if (b[j].len > 0) {
        for (std::int64_t k = 0; k < b[j].len; ++k) {
          CHECK(text[b[j].pos + k] == block[j + k]);
        }
      }
    }
  }
}
