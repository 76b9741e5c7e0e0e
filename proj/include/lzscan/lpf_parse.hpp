////////////////////////////////////////////////////////////////////////////////
// lpf_parse.hpp
//   Greedy longest-previous-factor parsing, block by block.  Each block is
//   indexed on its own; matches reaching back before the block come from
//   the inverted matching statistics, matches inside it from a per-block
//   LPF table.  Working space is therefore proportional to the block, not
//   the text.
////////////////////////////////////////////////////////////////////////////////

#ifndef LZSCAN_LPF_PARSE_HPP
#define LZSCAN_LPF_PARSE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lzscan/block_index.hpp"
#include "lzscan/matching_stats.hpp"

namespace lzscan {

// One phrase of the parse.  len > 0: copy len symbols from the earlier
// text position pos.  len == 0: literal, pos holds the symbol code.
struct Phrase {
  std::int64_t pos = 0;
  std::int64_t len = 0;
  bool operator==(const Phrase&) const = default;
};

struct Factorization {
  std::vector<Phrase> phrases;
  std::int64_t text_length = 0;
};

// Raised when a factorization cannot describe any text: bad literal codes,
// sources at or past their phrase, lengths not adding up.
class MalformedParse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParseOptions {
  std::int64_t block_size = std::int64_t(1) << 20;
  MsMode ms_mode = MsMode::kOnePosition;
  bool skip = true;
  std::int64_t skip_threshold = 40;
  BlockIndex::Options index;
};

struct ParseStats {
  std::int64_t text_length = 0;
  std::int64_t phrase_count = 0;
  double seconds = 0.0;  // parse only; input already resident
  // Largest per-block footprint: index plus the three per-block tables.
  std::size_t peak_block_bytes = 0;
  std::size_t phrase_mark_bytes = 0;  // the n-bit phrase-start bitvector
  double peak_index_bytes_per_char = 0.0;
};

// Longest previous factor within the block alone: entry j holds (q, len)
// with q < j and block[q, q+len) == block[j, j+len), len maximal; sources
// may overlap the position they feed.  (-1, 0) when block[j] is new.
std::vector<MsEntry> lpf_of_block(const BlockIndex& idx);

// Combine matches into the text prefix (absolute positions) with in-block
// LPF entries (block-relative, shifted by block_begin).  Longer wins; ties
// go to the prefix side.
std::vector<MsEntry> merge_lpf(std::span<const MsEntry> prefix_ms,
                               std::span<const MsEntry> block_lpf,
                               std::int64_t block_begin);

// Greedy phrases over [max(carry, begin), end), appended to out.  A phrase
// that would stop exactly on the block boundary is withheld and its start
// returned instead, unless the block ends the text; the caller grows it
// into the following block.
std::optional<std::int64_t> factorize_block(std::span<const MsEntry> lpf,
                                            std::span<const std::uint8_t> text,
                                            std::int64_t begin,
                                            std::int64_t end,
                                            std::int64_t carry,
                                            std::vector<Phrase>& out);

// Longest match of text[start..] beginning strictly before start, found by
// direct comparison in constant extra space; a literal phrase when text[start]
// has not occurred before.  seed is an optional known match used as the
// starting bound; the result is never shorter than it.
Phrase extend_last_phrase(std::span<const std::uint8_t> text,
                          std::int64_t start, const Phrase& seed = {0, 0});

// The full parser.  Throws std::invalid_argument on empty input or a
// non-positive block size.
Factorization lz_parse(std::span<const std::uint8_t> text,
                       const ParseOptions& opts = {},
                       ParseStats* stats = nullptr);

// Reconstruct the text; throws MalformedParse when the phrases are not a
// valid factorization of any text of the declared length.
std::vector<std::uint8_t> decode(const Factorization& f);

}  // namespace lzscan

#endif  // LZSCAN_LPF_PARSE_HPP
