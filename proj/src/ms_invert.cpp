////////////////////////////////////////////////////////////////////////////////
// ms_invert.cpp
////////////////////////////////////////////////////////////////////////////////

#include "lzscan/ms_invert.hpp"

#include <algorithm>

namespace lzscan {

std::vector<MsEntry> InvertState::finalize(const BlockIndex& idx) {
  const auto sa = idx.sa();
  const auto lcp = idx.lcp();
  const std::int32_t rows = idx.rows();

  // Ranks 1..rows-1 hold the real suffixes; rank 0 is the sentinel.  A
  // match recorded for one suffix is also a match for its suffix array
  // neighbours, shortened to the common prefix length, so a sweep in each
  // direction carrying that bound completes the table.
  MsEntry carry;
  for (std::int32_t t = 1; t < rows; ++t) {
    carry.len = std::min(carry.len, static_cast<std::int64_t>(lcp[t]));
    MsEntry& slot = acc_[sa[t]];
    if (slot.len >= carry.len) {
      carry = slot;
    } else {
      slot = carry;
    }
  }
  carry = MsEntry{};
  for (std::int32_t t = rows - 1; t >= 1; --t) {
    if (t + 1 < rows) {
      carry.len = std::min(carry.len, static_cast<std::int64_t>(lcp[t + 1]));
    }
    MsEntry& slot = acc_[sa[t]];
    if (slot.len >= carry.len) {
      carry = slot;
    } else {
      slot = carry;
    }
  }
  return std::move(acc_);
}

}  // namespace lzscan
