////////////////////////////////////////////////////////////////////////////////
// block_index.hpp
//   Per-block text index: suffix array, LCP array with range minima, BWT
//   with rank support, and the navigation tables used by the matching
//   statistics scanners.  The index is rebuilt for each block and freed
//   with it, so every structure is sized by the block, not the text.
////////////////////////////////////////////////////////////////////////////////

#ifndef LZSCAN_BLOCK_INDEX_HPP
#define LZSCAN_BLOCK_INDEX_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lzscan {

// Inclusive range of suffix array rows; empty when lo > hi.
struct SaInterval {
  std::int32_t lo = 0;
  std::int32_t hi = -1;
  bool empty() const { return lo > hi; }
  bool operator==(const SaInterval&) const = default;
};

// One occurrence of a symbol in the BWT near a query row.
struct NearbyOcc {
  std::int32_t row = 0;      // row holding the symbol
  std::int32_t rank = 0;     // occurrences of the symbol in bwt[0..row]
  std::int32_t min_lcp = 0;  // common prefix length of this row's suffix
                             // and the query row's suffix
};

class BlockIndex {
 public:
  struct Options {
    // Row distances at or above this limit are stored as an escape value
    // and answered through the binary-search fallback instead.
    std::uint32_t nsv_psv_offset_limit = 0xFFFF;
    // Row count per BWT summary chunk; 0 picks twice the block alphabet.
    std::int32_t summary_chunk = 0;
  };

  // The block is borrowed, not copied; it must outlive the index.
  explicit BlockIndex(std::span<const std::uint8_t> block)
      : BlockIndex(block, Options()) {}
  BlockIndex(std::span<const std::uint8_t> block, Options opts);

  static constexpr std::uint16_t kSentinel = 256;

  std::int64_t block_size() const { return b_; }
  // Suffix array rows, including the sentinel-only suffix at rank 0.
  std::int32_t rows() const { return rows_; }

  std::span<const std::uint8_t> block() const { return block_; }
  std::span<const std::int32_t> sa() const { return sa_; }
  std::span<const std::int32_t> isa() const { return isa_; }
  std::span<const std::int32_t> lcp() const { return lcp_; }
  std::span<const std::uint16_t> bwt() const { return bwt_; }
  // occ_rank[r] = occurrences of bwt[r] in bwt[0..r].
  std::span<const std::int32_t> occ_rank() const { return occ_rank_; }

  // Rows whose suffix starts with c form
  // [count_less(c), count_less(c) + symbol_count(c) - 1].
  std::int32_t count_less(std::uint8_t c) const { return count_less_[c]; }
  std::int32_t symbol_count(std::uint8_t c) const { return symbol_count_[c]; }

  SaInterval full_interval() const { return {0, rows_ - 1}; }

  // One backward search step: rows whose suffix starts with c followed by
  // the common prefix of the rows in iv.  Empty when no such suffix exists.
  SaInterval backward_extend(const SaInterval& iv, std::uint8_t c) const;

  // Rows r <= row with bwt[r] == c.
  std::int32_t rank(std::uint8_t c, std::int32_t row) const;

  // Nearest row strictly before/after `row` whose BWT symbol is c.  Scans
  // the row's summary chunk directly and consults the per-chunk summaries
  // beyond it, so the cost is bounded by the chunk size.
  std::optional<NearbyOcc> nearest_occ_before(std::uint8_t c,
                                              std::int32_t row) const;
  std::optional<NearbyOcc> nearest_occ_after(std::uint8_t c,
                                             std::int32_t row) const;

  // Leftmost position of the minimum of lcp[lo..hi], inclusive bounds.
  std::int32_t rmq_lcp(std::int32_t lo, std::int32_t hi) const;

  // Common prefix length of the block suffixes starting at i and j.
  std::int64_t suffix_lcp(std::int64_t i, std::int64_t j) const;

  // Nearest row with a strictly smaller LCP value: psv looks below `row`,
  // nsv above.  No such row yields -1 (psv) or rows() (nsv).  Both read a
  // 16-bit offset when it fits and fall back to a binary search over range
  // minima when it was stored as the escape value.
  std::int32_t psv(std::int32_t row) const;
  std::int32_t nsv(std::int32_t row) const;

  // Bytes held by the index structures themselves; the borrowed block
  // text is not included.
  std::size_t size_bytes() const;

 private:
  struct Summary {
    std::int32_t pre_row = -1;   // last row < chunk start holding the symbol
    std::int32_t pre_min = 0;    // min lcp[pre_row+1 .. chunk start]
    std::int32_t post_row = -1;  // first row >= chunk start holding the symbol
    std::int32_t post_min = 0;   // min lcp[chunk start .. post_row]
  };

  std::int32_t fallback_psv(std::int32_t row) const;
  std::int32_t fallback_nsv(std::int32_t row) const;

  std::span<const std::uint8_t> block_;
  std::int64_t b_ = 0;
  std::int32_t rows_ = 0;
  std::int32_t sigma_ = 0;
  std::int32_t sum_chunk_ = 0;

  std::vector<std::int32_t> sa_, isa_, lcp_;
  std::vector<std::uint16_t> bwt_;
  std::vector<std::int32_t> occ_rank_;
  std::array<std::int32_t, 256> count_less_{};
  std::array<std::int32_t, 256> symbol_count_{};
  std::array<std::int16_t, 256> dense_id_{};

  // BWT rank: absolute counts every 65536 rows, 16-bit deltas every 64.
  std::vector<std::uint32_t> rank_super_;
  std::vector<std::uint16_t> rank_block_;

  // NSV/PSV as row distances, 0xFFFF = escape to the fallback.
  std::vector<std::uint16_t> psv_off_, nsv_off_;

  // RMQ over lcp: leftmost argmin per 64-row chunk plus a sparse table.
  std::vector<std::int32_t> chunk_argmin_;
  std::vector<std::vector<std::int32_t>> sparse_;

  std::vector<Summary> summaries_;  // sigma_ entries per chunk
};

}  // namespace lzscan

#endif  // LZSCAN_BLOCK_INDEX_HPP
