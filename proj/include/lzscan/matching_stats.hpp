////////////////////////////////////////////////////////////////////////////////
// matching_stats.hpp
//   Right-to-left matching statistics of a text against one indexed block.
//   For each scanned position i the scanners report the longest prefix of
//   text[i..] that occurs somewhere in the block, together with one block
//   position where it occurs.  Two interchangeable scanners are provided:
//   the classic interval scanner and a cheaper one that tracks a single
//   suffix array row.
////////////////////////////////////////////////////////////////////////////////

#ifndef LZSCAN_MATCHING_STATS_HPP
#define LZSCAN_MATCHING_STATS_HPP

#include <cstdint>
#include <span>

#include "lzscan/bitvector.hpp"
#include "lzscan/block_index.hpp"

namespace lzscan {

// One matching statistics entry: pos = -1 and len = 0 when nothing matches.
struct MsEntry {
  std::int64_t pos = -1;
  std::int64_t len = 0;
  bool operator==(const MsEntry&) const = default;
};

enum class MsMode { kStandard, kOnePosition };

// Scanner start state.  kEmpty begins with no match, so entries describe
// text[i..prefix_len) alone.  kBlock begins as if the whole block had just
// been matched; the parser uses it with text laid out so that the block
// itself follows the scanned prefix, letting matches run into the block.
enum class ScanStart { kEmpty, kBlock };

struct MsScanOptions {
  MsMode mode = MsMode::kOnePosition;
  ScanStart start = ScanStart::kBlock;
  // Jump over positions lying inside an already discovered phrase of at
  // least skip_threshold symbols; requires phrase_starts to be accurate.
  // Meant for the kBlock layout: a restart searches text[i..] whole, so
  // with kEmpty it would disagree with the prefix-confined step values.
  bool skip = false;
  std::int64_t skip_threshold = 40;
};

// (interval of all block suffixes extending the match, match length)
struct MsRestart {
  SaInterval interval;
  std::int64_t len = 0;
};

// Longest prefix of text[start..] occurring in the block, found by plain
// binary searches; used to re-enter a scan after a skip.
MsRestart ms_restart(const BlockIndex& idx,
                     std::span<const std::uint8_t> text, std::int64_t start);

class StandardScanner {
 public:
  StandardScanner(const BlockIndex& idx, ScanStart start);
  MsEntry step(std::uint8_t c);
  MsEntry restart(std::span<const std::uint8_t> text, std::int64_t i);

  // Resume from a known state: iv must be the exact interval of the
  // currently matched string of length len.
  void reset(const SaInterval& iv, std::int64_t len) {
    iv_ = iv;
    len_ = len;
  }
  SaInterval interval() const { return iv_; }
  std::int64_t len() const { return len_; }

 private:
  void contract();

  const BlockIndex* idx_;
  SaInterval iv_;
  std::int64_t len_;
};

class OnePositionScanner {
 public:
  OnePositionScanner(const BlockIndex& idx, ScanStart start);
  MsEntry step(std::uint8_t c);
  MsEntry restart(std::span<const std::uint8_t> text, std::int64_t i);

  // Resume from a known state: row may be any suffix array row whose
  // suffix extends the currently matched string of length len.
  void reset(std::int32_t row, std::int64_t len) {
    row_ = row;
    len_ = len;
  }
  std::int32_t row() const { return row_; }
  std::int64_t len() const { return len_; }

 private:
  const BlockIndex* idx_;
  std::int32_t row_;
  std::int64_t len_;
};

// Feed text[prefix_len-1] .. text[0] to a scanner, calling
// sink(i, entry) for every position the scan visits.  With skipping on,
// positions inside long known phrases are jumped over and never reported;
// the scan resumes at the phrase start's left neighbour via ms_restart.
template <typename Scanner, typename Sink>
void ms_scan_with(const BlockIndex& idx, std::span<const std::uint8_t> text,
                  std::int64_t prefix_len, const BitVector& phrase_starts,
                  const MsScanOptions& opts, Sink&& sink) {
  Scanner scanner(idx, opts.start);
  std::int64_t ph_start = prefix_len - 1;
  while (ph_start > 0 && !phrase_starts.get(ph_start)) --ph_start;
  std::int64_t ph_end = prefix_len;
  auto slide = [&](std::int64_t i) {
    while (i < ph_start) {
      ph_end = ph_start;
      --ph_start;
      while (ph_start > 0 && !phrase_starts.get(ph_start)) --ph_start;
    }
  };
  bool from_restart = false;
  std::int64_t i = prefix_len - 1;
  while (i >= 0) {
    slide(i);
    const MsEntry e =
        from_restart ? scanner.restart(text, i) : scanner.step(text[i]);
    from_restart = false;
    sink(i, e);
    if (opts.skip && ph_end - ph_start >= opts.skip_threshold &&
        i + e.len <= ph_end) {
      if (ph_start == 0) return;
      i = ph_start - 1;
      from_restart = true;
      continue;
    }
    --i;
  }
}

template <typename Sink>
void ms_scan(const BlockIndex& idx, std::span<const std::uint8_t> text,
             std::int64_t prefix_len, const BitVector& phrase_starts,
             const MsScanOptions& opts, Sink&& sink) {
  if (opts.mode == MsMode::kStandard) {
    ms_scan_with<StandardScanner>(idx, text, prefix_len, phrase_starts, opts,
                                  sink);
  } else {
    ms_scan_with<OnePositionScanner>(idx, text, prefix_len, phrase_starts,
                                     opts, sink);
  }
}

}  // namespace lzscan

#endif  // LZSCAN_MATCHING_STATS_HPP
