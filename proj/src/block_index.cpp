////////////////////////////////////////////////////////////////////////////////
// block_index.cpp
////////////////////////////////////////////////////////////////////////////////

#include "lzscan/block_index.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <limits>

#include "lzscan/suffix_array.hpp"

namespace lzscan {

namespace {

constexpr std::int32_t kRankSuper = 65536;
constexpr std::int32_t kRankBlock = 64;
constexpr std::int32_t kRmqChunk = 64;
constexpr std::uint16_t kOffsetEscape = 0xFFFF;

}  // namespace

BlockIndex::BlockIndex(std::span<const std::uint8_t> block, Options opts)
    : block_(block), b_(static_cast<std::int64_t>(block.size())) {
  assert(b_ > 0);
  rows_ = static_cast<std::int32_t>(b_) + 1;

  sa_ = build_suffix_array(block_);
  isa_.resize(rows_);
  for (std::int32_t r = 0; r < rows_; ++r) isa_[sa_[r]] = r;
  lcp_ = build_lcp_array(block_, sa_);

  bwt_.resize(rows_);
  for (std::int32_t r = 0; r < rows_; ++r) {
    bwt_[r] = sa_[r] > 0 ? block_[sa_[r] - 1] : kSentinel;
  }

  dense_id_.fill(-1);
  for (std::int64_t i = 0; i < b_; ++i) ++symbol_count_[block_[i]];
  {
    std::int32_t acc = 1;  // rank 0 is the sentinel suffix
    for (std::int32_t c = 0; c < 256; ++c) {
      count_less_[c] = acc;
      acc += symbol_count_[c];
      if (symbol_count_[c] > 0) dense_id_[c] = static_cast<std::int16_t>(sigma_++);
    }
  }

  occ_rank_.resize(rows_);
  {
    std::array<std::int32_t, 257> seen{};
    for (std::int32_t r = 0; r < rows_; ++r) occ_rank_[r] = ++seen[bwt_[r]];
  }

  // Rank blocks.
  {
    const std::int32_t nsuper = (rows_ + kRankSuper - 1) / kRankSuper;
    const std::int32_t nblock = (rows_ + kRankBlock - 1) / kRankBlock;
    rank_super_.assign(static_cast<std::size_t>(nsuper) * sigma_, 0);
    rank_block_.assign(static_cast<std::size_t>(nblock) * sigma_, 0);
    std::vector<std::int32_t> total(sigma_, 0), at_super(sigma_, 0);
    for (std::int32_t r = 0; r < rows_; ++r) {
      if (r % kRankSuper == 0) {
        for (std::int32_t id = 0; id < sigma_; ++id) {
          rank_super_[static_cast<std::size_t>(r / kRankSuper) * sigma_ + id] =
              static_cast<std::uint32_t>(total[id]);
        }
        at_super = total;
      }
      if (r % kRankBlock == 0) {
        for (std::int32_t id = 0; id < sigma_; ++id) {
          rank_block_[static_cast<std::size_t>(r / kRankBlock) * sigma_ + id] =
              static_cast<std::uint16_t>(total[id] - at_super[id]);
        }
      }
      if (bwt_[r] != kSentinel) ++total[dense_id_[bwt_[r]]];
    }
  }

  // NSV/PSV offsets over the LCP array.
  {
    std::vector<std::int32_t> psv(rows_), nsv(rows_), stack;
    stack.reserve(64);
    for (std::int32_t r = 0; r < rows_; ++r) {
      while (!stack.empty() && lcp_[stack.back()] >= lcp_[r]) stack.pop_back();
      psv[r] = stack.empty() ? -1 : stack.back();
      stack.push_back(r);
    }
    stack.clear();
    for (std::int32_t r = rows_ - 1; r >= 0; --r) {
      while (!stack.empty() && lcp_[stack.back()] >= lcp_[r]) stack.pop_back();
      nsv[r] = stack.empty() ? rows_ : stack.back();
      stack.push_back(r);
    }
    psv_off_.resize(rows_);
    nsv_off_.resize(rows_);
    const std::uint32_t limit = std::min<std::uint32_t>(
        opts.nsv_psv_offset_limit, kOffsetEscape);
    for (std::int32_t r = 0; r < rows_; ++r) {
      const std::uint32_t pd = static_cast<std::uint32_t>(r - psv[r]);
      const std::uint32_t nd = static_cast<std::uint32_t>(nsv[r] - r);
      psv_off_[r] = pd < limit ? static_cast<std::uint16_t>(pd) : kOffsetEscape;
      nsv_off_[r] = nd < limit ? static_cast<std::uint16_t>(nd) : kOffsetEscape;
    }
  }

  // RMQ: leftmost argmin of each 64-row chunk, sparse table on top.
  {
    const std::int32_t nchunk = (rows_ + kRmqChunk - 1) / kRmqChunk;
    chunk_argmin_.resize(nchunk);
    for (std::int32_t c = 0; c < nchunk; ++c) {
      const std::int32_t lo = c * kRmqChunk;
      const std::int32_t hi = std::min(lo + kRmqChunk, rows_);
      std::int32_t best = lo;
      for (std::int32_t r = lo + 1; r < hi; ++r) {
        if (lcp_[r] < lcp_[best]) best = r;
      }
      chunk_argmin_[c] = best;
    }
    auto better = [&](std::int32_t a, std::int32_t b) {
      return (lcp_[a] < lcp_[b] || (lcp_[a] == lcp_[b] && a < b)) ? a : b;
    };
    sparse_.push_back(chunk_argmin_);
    for (std::int32_t len = 2; len <= nchunk; len *= 2) {
      const auto& prev = sparse_.back();
      std::vector<std::int32_t> next(nchunk - len + 1);
      for (std::int32_t c = 0; c + len <= nchunk; ++c) {
        next[c] = better(prev[c], prev[c + len / 2]);
      }
      sparse_.push_back(std::move(next));
    }
  }

  // Per-chunk BWT summaries, chunk size defaulting to twice the alphabet.
  {
    sum_chunk_ = opts.summary_chunk > 0 ? opts.summary_chunk
                                        : std::max(2, 2 * sigma_);
    const std::int32_t nchunk = (rows_ + sum_chunk_ - 1) / sum_chunk_;
    summaries_.resize(static_cast<std::size_t>(nchunk) * sigma_);
    std::vector<std::int32_t> last(sigma_, -1), next(sigma_, -1);
    for (std::int32_t c = 0; c < nchunk; ++c) {
      const std::int32_t start = c * sum_chunk_;
      for (std::int32_t id = 0; id < sigma_; ++id) {
        Summary& s = summaries_[static_cast<std::size_t>(c) * sigma_ + id];
        s.pre_row = last[id];
        if (last[id] >= 0) s.pre_min = lcp_[rmq_lcp(last[id] + 1, start)];
      }
      const std::int32_t stop = std::min(start + sum_chunk_, rows_);
      for (std::int32_t r = start; r < stop; ++r) {
        if (bwt_[r] != kSentinel) last[dense_id_[bwt_[r]]] = r;
      }
    }
    for (std::int32_t c = nchunk - 1; c >= 0; --c) {
      const std::int32_t start = c * sum_chunk_;
      const std::int32_t stop = std::min(start + sum_chunk_, rows_);
      for (std::int32_t r = stop - 1; r >= start; --r) {
        if (bwt_[r] != kSentinel) next[dense_id_[bwt_[r]]] = r;
      }
      for (std::int32_t id = 0; id < sigma_; ++id) {
        Summary& s = summaries_[static_cast<std::size_t>(c) * sigma_ + id];
        s.post_row = next[id];
        if (next[id] >= 0) s.post_min = lcp_[rmq_lcp(start, next[id])];
      }
    }
  }
}

std::int32_t BlockIndex::rank(std::uint8_t c, std::int32_t row) const {
  if (row < 0) return 0;
  const std::int16_t id = dense_id_[c];
  if (id < 0) return 0;
  std::int32_t cnt = static_cast<std::int32_t>(
      rank_super_[static_cast<std::size_t>(row / kRankSuper) * sigma_ + id]);
  cnt += rank_block_[static_cast<std::size_t>(row / kRankBlock) * sigma_ + id];
  for (std::int32_t r = row - row % kRankBlock; r <= row; ++r) {
    cnt += bwt_[r] == c;
  }
  return cnt;
}

SaInterval BlockIndex::backward_extend(const SaInterval& iv,
                                       std::uint8_t c) const {
  if (iv.empty() || symbol_count_[c] == 0) return {0, -1};
  const std::int32_t base = count_less_[c];
  const std::int32_t lo = base + rank(c, iv.lo - 1);
  const std::int32_t hi = base + rank(c, iv.hi) - 1;
  return {lo, hi};
}

std::optional<NearbyOcc> BlockIndex::nearest_occ_before(
    std::uint8_t c, std::int32_t row) const {
  if (dense_id_[c] < 0) return std::nullopt;
  std::int32_t acc = std::numeric_limits<std::int32_t>::max();
  const std::int32_t start = row / sum_chunk_ * sum_chunk_;
  for (std::int32_t r = row - 1; r >= start; --r) {
    acc = std::min(acc, lcp_[r + 1]);
    if (bwt_[r] == c) return NearbyOcc{r, rank(c, r), acc};
  }
  if (start == 0) return std::nullopt;
  const Summary& s = summaries_[static_cast<std::size_t>(row / sum_chunk_) *
                                    sigma_ +
                                dense_id_[c]];
  if (s.pre_row < 0) return std::nullopt;
  return NearbyOcc{s.pre_row, rank(c, s.pre_row), std::min(acc, s.pre_min)};
}

std::optional<NearbyOcc> BlockIndex::nearest_occ_after(
    std::uint8_t c, std::int32_t row) const {
  if (dense_id_[c] < 0) return std::nullopt;
  std::int32_t acc = std::numeric_limits<std::int32_t>::max();
  const std::int32_t stop = std::min(row / sum_chunk_ * sum_chunk_ + sum_chunk_,
                                     rows_);
  for (std::int32_t r = row + 1; r < stop; ++r) {
    acc = std::min(acc, lcp_[r]);
    if (bwt_[r] == c) return NearbyOcc{r, rank(c, r), acc};
  }
  if (stop == rows_) return std::nullopt;
  const Summary& s = summaries_[static_cast<std::size_t>(stop / sum_chunk_) *
                                    sigma_ +
                                dense_id_[c]];
  if (s.post_row < 0) return std::nullopt;
  return NearbyOcc{s.post_row, rank(c, s.post_row), std::min(acc, s.post_min)};
}

std::int32_t BlockIndex::rmq_lcp(std::int32_t lo, std::int32_t hi) const {
  assert(0 <= lo && lo <= hi && hi < rows_);
  auto better = [&](std::int32_t a, std::int32_t b) {
    return (lcp_[a] < lcp_[b] || (lcp_[a] == lcp_[b] && a < b)) ? a : b;
  };
  const std::int32_t clo = lo / kRmqChunk, chi = hi / kRmqChunk;
  if (clo == chi) {
    std::int32_t best = lo;
    for (std::int32_t r = lo + 1; r <= hi; ++r) best = better(best, r);
    return best;
  }
  std::int32_t best = lo;
  for (std::int32_t r = lo + 1; r < (clo + 1) * kRmqChunk; ++r) {
    best = better(best, r);
  }
  for (std::int32_t r = chi * kRmqChunk; r <= hi; ++r) best = better(best, r);
  if (clo + 1 <= chi - 1) {
    const std::int32_t span = chi - 1 - (clo + 1) + 1;
    const std::int32_t level = std::bit_width(static_cast<std::uint32_t>(span)) - 1;
    best = better(best, sparse_[level][clo + 1]);
    best = better(best, sparse_[level][chi - 1 - (1 << level) + 1]);
  }
  return best;
}

std::int64_t BlockIndex::suffix_lcp(std::int64_t i, std::int64_t j) const {
  if (i == j) return b_ - i;
  std::int32_t ri = isa_[i], rj = isa_[j];
  if (ri > rj) std::swap(ri, rj);
  return lcp_[rmq_lcp(ri + 1, rj)];
}

std::int32_t BlockIndex::fallback_psv(std::int32_t row) const {
  const std::int32_t v = lcp_[row];
  if (row == 0 || lcp_[rmq_lcp(0, row - 1)] >= v) return -1;
  std::int32_t lo = 0, hi = row - 1;
  while (lo < hi) {
    const std::int32_t mid = lo + (hi - lo + 1) / 2;
    if (lcp_[rmq_lcp(mid, row - 1)] < v) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

std::int32_t BlockIndex::fallback_nsv(std::int32_t row) const {
  const std::int32_t v = lcp_[row];
  if (row == rows_ - 1 || lcp_[rmq_lcp(row + 1, rows_ - 1)] >= v) return rows_;
  std::int32_t lo = row + 1, hi = rows_ - 1;
  while (lo < hi) {
    const std::int32_t mid = lo + (hi - lo) / 2;
    if (lcp_[rmq_lcp(row + 1, mid)] < v) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::int32_t BlockIndex::psv(std::int32_t row) const {
  const std::uint16_t off = psv_off_[row];
  if (off != kOffsetEscape) return row - off;
  return fallback_psv(row);
}

std::int32_t BlockIndex::nsv(std::int32_t row) const {
  const std::uint16_t off = nsv_off_[row];
  if (off != kOffsetEscape) return row + off;
  return fallback_nsv(row);
}

std::size_t BlockIndex::size_bytes() const {
  std::size_t total = 0;
  total += sa_.size() * sizeof(sa_[0]);
  total += isa_.size() * sizeof(isa_[0]);
  total += lcp_.size() * sizeof(lcp_[0]);
  total += bwt_.size() * sizeof(bwt_[0]);
  total += occ_rank_.size() * sizeof(occ_rank_[0]);
  total += sizeof(count_less_) + sizeof(symbol_count_) + sizeof(dense_id_);
  total += rank_super_.size() * sizeof(rank_super_[0]);
  total += rank_block_.size() * sizeof(rank_block_[0]);
  total += psv_off_.size() * sizeof(psv_off_[0]);
  total += nsv_off_.size() * sizeof(nsv_off_[0]);
  total += chunk_argmin_.size() * sizeof(chunk_argmin_[0]);
  for (const auto& level : sparse_) total += level.size() * sizeof(level[0]);
  total += summaries_.size() * sizeof(summaries_[0]);
  return total;
}

}  // namespace lzscan
