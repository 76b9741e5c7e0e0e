////////////////////////////////////////////////////////////////////////////////
// test_lpf_parse.cpp
////////////////////////////////////////////////////////////////////////////////

#include "lzscan/lpf_parse.hpp"

#include <random>

#include "doctest.h"
#include "lzscan/block_index.hpp"
#include "lzscan/oracle.hpp"
#include "test_support.hpp"

using lzscan::BlockIndex;
using lzscan::Factorization;
using lzscan::MsEntry;
using lzscan::MsMode;
using lzscan::ParseOptions;
using lzscan::ParseStats;
using lzscan::Phrase;
using test_support::Bytes;
using test_support::bytes_of;

TEST_CASE("in-block longest previous factors") {
  {
    const Bytes b = bytes_of("banana");
    const BlockIndex idx(b);
    const auto lpf = lzscan::lpf_of_block(idx);
    CHECK(lpf[0] == MsEntry{-1, 0});
    CHECK(lpf[1] == MsEntry{-1, 0});
    CHECK(lpf[2] == MsEntry{-1, 0});
    CHECK(lpf[3] == MsEntry{1, 3});
    CHECK(lpf[4] == MsEntry{2, 2});
    CHECK(lpf[5].len == 1);  // "a" seen at 1 and 3; either source is right
    CHECK((lpf[5].pos == 1 || lpf[5].pos == 3));
  }
  {
    const Bytes b = bytes_of("ab");
    const BlockIndex idx(b);
    const auto lpf = lzscan::lpf_of_block(idx);
    CHECK(lpf[0] == MsEntry{-1, 0});
    CHECK(lpf[1] == MsEntry{-1, 0});
  }
  {
    // Overlapping source: position 1 copies three symbols from position 0.
    const Bytes b = bytes_of("aaaa");
    const BlockIndex idx(b);
    const auto lpf = lzscan::lpf_of_block(idx);
    CHECK(lpf[1] == MsEntry{0, 3});
    CHECK(lpf[2].len == 2);
  }
}

TEST_CASE("in-block factors match the oracle lengths") {
  std::mt19937 rng(90001);
  for (int round = 0; round < 150; ++round) {
    const int sigma = std::vector<int>{1, 2, 3, 26}[round % 4];
    const Bytes b = test_support::random_bytes(rng, 1 + rng() % 80, sigma);
    const BlockIndex idx(b);
    const auto got = lzscan::lpf_of_block(idx);
    const auto want = lzscan::brute_lpf(b);
    REQUIRE(got.size() == want.size());
    for (std::size_t j = 0; j < got.size(); ++j) {
      REQUIRE(got[j].len == want[j].len);
      if (got[j].len > 0) {
        REQUIRE(got[j].pos >= 0);
        REQUIRE(got[j].pos < static_cast<std::int64_t>(j));
        for (std::int64_t k = 0; k < got[j].len; ++k) {
          CHECK(b[got[j].pos + k] == b[j + k]);
        }
      }
    }
  }
}

TEST_CASE("merging prefix and in-block matches") {
  const std::vector<MsEntry> prefix = {{-1, 0}, {5, 2}, {7, 4}};
  const std::vector<MsEntry> block = {{0, 2}, {1, 2}, {0, 1}};
  const auto merged = lzscan::merge_lpf(prefix, block, 10);
  CHECK(merged[0] == MsEntry{10, 2});  // block side, shifted
  CHECK(merged[1] == MsEntry{5, 2});   // tie goes to the prefix
  CHECK(merged[2] == MsEntry{7, 4});   // prefix side wins outright
}

TEST_CASE("factorizing one block") {
  const Bytes text = bytes_of("abaabab");
  const BlockIndex idx(text);
  const auto lpf = lzscan::lpf_of_block(idx);

  std::vector<Phrase> out;
  // Whole text as the last block: nothing withheld.
  const auto withheld = lzscan::factorize_block(lpf, text, 0, 7, 0, out);
  CHECK(!withheld.has_value());
  REQUIRE(out.size() == 5);
  CHECK(out[0] == Phrase{'a', 0});
  CHECK(out[1] == Phrase{'b', 0});
  CHECK(out[2].len == 1);
  CHECK(out[3].len == 3);
  CHECK(out[4].len == 1);

  // A carry inside the block starts the phrases there.
  out.clear();
  const auto w2 = lzscan::factorize_block(lpf, text, 0, 7, 3, out);
  CHECK(!w2.has_value());
  REQUIRE(out.size() == 2);
  CHECK(out[0].len == 3);

  // A carry at or past the end produces nothing.
  out.clear();
  CHECK(!lzscan::factorize_block(lpf, text, 0, 7, 7, out).has_value());
  CHECK(out.empty());
}

TEST_CASE("a phrase reaching the block boundary is withheld") {
  const Bytes text = bytes_of("aab");
  const Bytes head(text.begin(), text.begin() + 2);
  const BlockIndex idx(head);
  const auto lpf = lzscan::lpf_of_block(idx);
  std::vector<Phrase> out;
  const auto withheld = lzscan::factorize_block(lpf, text, 0, 2, 0, out);
  REQUIRE(withheld.has_value());
  CHECK(*withheld == 1);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == Phrase{'a', 0});
}

TEST_CASE("extending the boundary phrase") {
  {
    const Bytes text = bytes_of("abaabab");
    CHECK(lzscan::extend_last_phrase(text, 3) == Phrase{0, 3});
    CHECK(lzscan::extend_last_phrase(text, 3, {2, 1}) == Phrase{0, 3});
    // A seed that is already the optimum survives.
    CHECK(lzscan::extend_last_phrase(text, 3, {0, 3}) == Phrase{0, 3});
  }
  {
    const Bytes text = bytes_of("aaaa");
    CHECK(lzscan::extend_last_phrase(text, 1) == Phrase{0, 3});
  }
  {
    // Nothing earlier matches: a literal comes back.
    const Bytes text = bytes_of("ab");
    CHECK(lzscan::extend_last_phrase(text, 1) == Phrase{'b', 0});
  }
}

TEST_CASE("parsing banana") {
  const Bytes text = bytes_of("banana");
  const std::vector<Phrase> want = {{'b', 0}, {'a', 0}, {'n', 0}, {1, 3}};
  for (const std::int64_t b : {6, 2, 1, 3, 4, 5, 7}) {
    ParseOptions opts;
    opts.block_size = b;
    const Factorization f = lzscan::lz_parse(text, opts);
    CHECK(f.text_length == 6);
    CHECK(f.phrases == want);
  }
}

TEST_CASE("parse rejects empty input and bad block sizes") {
  const Bytes text = bytes_of("abc");
  CHECK_THROWS_AS(lzscan::lz_parse({}), std::invalid_argument);
  ParseOptions opts;
  opts.block_size = 0;
  CHECK_THROWS_AS(lzscan::lz_parse(text, opts), std::invalid_argument);
  opts.block_size = -4;
  CHECK_THROWS_AS(lzscan::lz_parse(text, opts), std::invalid_argument);
}

TEST_CASE("runs spanning many blocks ride the carry") {
  const Bytes text(50, 'a');
  ParseOptions opts;
  opts.block_size = 3;
  ParseStats st;
  const Factorization f = lzscan::lz_parse(text, opts, &st);
  REQUIRE(f.phrases.size() == 2);
  CHECK(f.phrases[0] == Phrase{'a', 0});
  CHECK(f.phrases[1] == Phrase{0, 49});
  CHECK(st.phrase_count == 2);
  CHECK(st.text_length == 50);
  CHECK(lzscan::decode(f) == text);
}

TEST_CASE("parse equals the oracle across block sizes and modes") {
  std::mt19937 rng(90002);
  for (int round = 0; round < 120; ++round) {
    const int sigma = std::vector<int>{1, 2, 3, 4, 26}[round % 5];
    const std::int64_t n = 1 + rng() % 256;
    const Bytes text = test_support::random_bytes(rng, n, sigma);
    const Factorization want = lzscan::brute_lz(text);

    for (const std::int64_t b :
         {std::int64_t(1), std::int64_t(2), std::int64_t(3), std::int64_t(5),
          std::int64_t(8), std::int64_t(17), std::int64_t(64), n}) {
      ParseOptions opts;
      opts.block_size = b;
      opts.ms_mode = round % 2 ? MsMode::kStandard : MsMode::kOnePosition;
      opts.skip = round % 3 != 0;
      opts.skip_threshold = 4;  // exercise skipping on short inputs too
      const Factorization got = lzscan::lz_parse(text, opts);
      REQUIRE(test_support::same_boundaries(got, want));
      REQUIRE(test_support::validate_parse(text, got));
      CHECK(lzscan::decode(got) == text);
    }
  }
}

TEST_CASE("scanner mode and skipping do not change the parse") {
  std::mt19937 rng(90003);
  for (int round = 0; round < 40; ++round) {
    const Bytes text =
        test_support::random_bytes(rng, 64 + rng() % 192, 1 + round % 3);
    Factorization first;
    bool have_first = false;
    for (const MsMode mode : {MsMode::kStandard, MsMode::kOnePosition}) {
      for (const bool skip : {false, true}) {
        ParseOptions opts;
        opts.block_size = 16;
        opts.ms_mode = mode;
        opts.skip = skip;
        opts.skip_threshold = 5;
        const Factorization got = lzscan::lz_parse(text, opts);
        if (!have_first) {
          first = got;
          have_first = true;
          REQUIRE(test_support::validate_parse(text, got));
        } else {
          CHECK(test_support::same_boundaries(got, first));
        }
      }
    }
  }
}

TEST_CASE("index fallbacks leave the parse intact") {
  std::mt19937 rng(90004);
  for (int round = 0; round < 20; ++round) {
    const Bytes text = test_support::random_bytes(rng, 64 + rng() % 64, 2);
    const Factorization want = lzscan::brute_lz(text);
    ParseOptions opts;
    opts.block_size = 9;
    opts.index.nsv_psv_offset_limit = 2;
    opts.index.summary_chunk = 3;
    const Factorization got = lzscan::lz_parse(text, opts);
    CHECK(test_support::same_boundaries(got, want));
    CHECK(lzscan::decode(got) == text);
  }
}

TEST_CASE("decoding rejects malformed factorizations") {
  CHECK_THROWS_AS((lzscan::decode({{}, 0})), lzscan::MalformedParse);
  CHECK_THROWS_AS((lzscan::decode({{}, 5})), lzscan::MalformedParse);
  // Literal code outside a byte.
  CHECK_THROWS_AS((lzscan::decode({{{300, 0}}, 1})), lzscan::MalformedParse);
  // Source at the current position.
  CHECK_THROWS_AS((lzscan::decode({{{'a', 0}, {1, 2}}, 3})),
                  lzscan::MalformedParse);
  // Phrases overrun the declared length.
  CHECK_THROWS_AS((lzscan::decode({{{'a', 0}, {0, 5}}, 3})),
                  lzscan::MalformedParse);
  // Phrases fall short of it.
  CHECK_THROWS_AS((lzscan::decode({{{'a', 0}}, 2})), lzscan::MalformedParse);
}

TEST_CASE("decode reconstructs hand-made parses") {
  const Factorization f = {{{'a', 0}, {'b', 0}, {0, 1}, {0, 3}, {1, 1}}, 7};
  CHECK(lzscan::decode(f) == bytes_of("abaabab"));
  // Overlapping copy: "ab" then 5 symbols from position 0.
  const Factorization g = {{{'a', 0}, {'b', 0}, {0, 5}}, 7};
  CHECK(lzscan::decode(g) == bytes_of("abababa"));
}
