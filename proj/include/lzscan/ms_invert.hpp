////////////////////////////////////////////////////////////////////////////////
// ms_invert.hpp
//   Inversion of matching statistics.  The scanners report, for positions
//   of the text prefix, matches into the block; the parser needs the other
//   direction: for each block position, the longest match starting some-
//   where in the prefix.  Collect the scanned entries and redistribute
//   them over the block in two LCP-bounded sweeps of the suffix array.
////////////////////////////////////////////////////////////////////////////////

#ifndef LZSCAN_MS_INVERT_HPP
#define LZSCAN_MS_INVERT_HPP

#include <cstdint>
#include <vector>

#include "lzscan/block_index.hpp"
#include "lzscan/matching_stats.hpp"

namespace lzscan {

class InvertState {
 public:
  explicit InvertState(std::int64_t block_size)
      : acc_(static_cast<std::size_t>(block_size)) {}

  // Record one scanned entry: text[text_pos, text_pos+len) occurs in the
  // block at entry.pos.  Keeps the longest match per block position, and
  // remembers where in the text it starts.
  void accumulate(std::int64_t text_pos, const MsEntry& entry) {
    if (entry.len > 0 && entry.len > acc_[entry.pos].len) {
      acc_[entry.pos] = {text_pos, entry.len};
    }
  }

  // Spread the collected matches to every block position: neighbours in
  // suffix array order share a match up to their common prefix length.
  // Consumes the state.  Entry j of the result is the longest match of
  // block[j..] starting at some scanned text position, as (text pos, len).
  std::vector<MsEntry> finalize(const BlockIndex& idx);

 private:
  std::vector<MsEntry> acc_;
};

}  // namespace lzscan

#endif  // LZSCAN_MS_INVERT_HPP
