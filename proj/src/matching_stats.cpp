////////////////////////////////////////////////////////////////////////////////
// matching_stats.cpp
////////////////////////////////////////////////////////////////////////////////

#include "lzscan/matching_stats.hpp"

#include <algorithm>

namespace lzscan {

MsRestart ms_restart(const BlockIndex& idx,
                     std::span<const std::uint8_t> text, std::int64_t start) {
  SaInterval iv = idx.full_interval();
  std::int64_t len = 0;
  const auto sa = idx.sa();
  const auto block = idx.block();
  const std::int64_t bsize = static_cast<std::int64_t>(block.size());
  while (start + len < static_cast<std::int64_t>(text.size())) {
    const std::int32_t c = text[start + len];
    // Symbol of the suffix at row r, `len` symbols in; the sentinel and
    // anything beyond it sort before every real symbol.
    auto sym = [&](std::int32_t r) -> std::int32_t {
      const std::int64_t p = sa[r] + len;
      return p >= bsize ? -1 : block[p];
    };
    std::int32_t lo = iv.lo, hi = iv.hi;
    {
      std::int32_t a = lo, b = hi + 1;
      while (a < b) {
        const std::int32_t m = a + (b - a) / 2;
        if (sym(m) < c) a = m + 1; else b = m;
      }
      lo = a;
    }
    {
      std::int32_t a = lo, b = iv.hi + 1;
      while (a < b) {
        const std::int32_t m = a + (b - a) / 2;
        if (sym(m) <= c) a = m + 1; else b = m;
      }
      hi = a - 1;
    }
    if (lo > hi) break;
    iv = {lo, hi};
    ++len;
  }
  return {iv, len};
}

StandardScanner::StandardScanner(const BlockIndex& idx, ScanStart start)
    : idx_(&idx) {
  if (start == ScanStart::kBlock) {
    iv_ = {idx.isa()[0], idx.isa()[0]};
    len_ = idx.block_size();
  } else {
    iv_ = idx.full_interval();
    len_ = 0;
  }
}

// Replace the interval by its enclosing one for the longest proper prefix
// of the current match that widens the row range.
void StandardScanner::contract() {
  const auto lcp = idx_->lcp();
  const std::int32_t above = lcp[iv_.lo];
  const std::int32_t below = iv_.hi + 1 < idx_->rows() ? lcp[iv_.hi + 1] : 0;
  const std::int32_t k = std::max(above, below);
  if (k == 0) {
    iv_ = idx_->full_interval();
    len_ = 0;
    return;
  }
  std::int32_t lo = iv_.lo, hi = iv_.hi;
  if (above == k) lo = idx_->psv(iv_.lo);
  if (below == k) hi = idx_->nsv(iv_.hi + 1) - 1;
  iv_ = {lo, hi};
  len_ = k;
}

MsEntry StandardScanner::step(std::uint8_t c) {
  for (;;) {
    const SaInterval ext = idx_->backward_extend(iv_, c);
    if (!ext.empty()) {
      iv_ = ext;
      ++len_;
      return {idx_->sa()[iv_.lo], len_};
    }
    if (len_ == 0) return {-1, 0};
    contract();
  }
}

MsEntry StandardScanner::restart(std::span<const std::uint8_t> text,
                                 std::int64_t i) {
  const MsRestart r = ms_restart(*idx_, text, i);
  iv_ = r.interval;
  len_ = r.len;
  if (len_ == 0) return {-1, 0};
  return {idx_->sa()[iv_.lo], len_};
}

OnePositionScanner::OnePositionScanner(const BlockIndex& idx, ScanStart start)
    : idx_(&idx) {
  if (start == ScanStart::kBlock) {
    row_ = idx.isa()[0];
    len_ = idx.block_size();
  } else {
    row_ = 0;
    len_ = 0;
  }
}

MsEntry OnePositionScanner::step(std::uint8_t c) {
  const BlockIndex& idx = *idx_;
  if (idx.symbol_count(c) == 0) {
    len_ = 0;
    row_ = 0;
    return {-1, 0};
  }
  if (idx.bwt()[row_] == c) {
    row_ = idx.count_less(c) + idx.rank(c, row_) - 1;
    ++len_;
  } else {
    const auto u = idx.nearest_occ_before(c, row_);
    if (u && u->min_lcp >= len_) {
      row_ = idx.count_less(c) + u->rank - 1;
      ++len_;
    } else {
      const auto v = idx.nearest_occ_after(c, row_);
      if (u && (!v || v->min_lcp <= u->min_lcp)) {
        row_ = idx.count_less(c) + u->rank - 1;
        len_ = u->min_lcp + 1;
      } else {
        row_ = idx.count_less(c) + (u ? u->rank : 0);
        len_ = std::min<std::int64_t>(len_, v->min_lcp) + 1;
      }
    }
  }
  return {idx.sa()[row_], len_};
}

MsEntry OnePositionScanner::restart(std::span<const std::uint8_t> text,
                                    std::int64_t i) {
  const MsRestart r = ms_restart(*idx_, text, i);
  row_ = r.interval.lo;
  len_ = r.len;
  if (len_ == 0) return {-1, 0};
  return {idx_->sa()[row_], len_};
}

}  // namespace lzscan
