////////////////////////////////////////////////////////////////////////////////
// lpf_parse.cpp
////////////////////////////////////////////////////////////////////////////////

#include "lzscan/lpf_parse.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>

#include "lzscan/bitvector.hpp"
#include "lzscan/ms_invert.hpp"

namespace lzscan {

std::vector<MsEntry> lpf_of_block(const BlockIndex& idx) {
  const std::int32_t rows = idx.rows();
  const auto sa = idx.sa();
  const auto isa = idx.isa();
  const std::int64_t blen = idx.block_size();

  // Nearest smaller suffix-array value on each side of every rank: those
  // are the only candidate sources for the longest previous factor.
  std::vector<std::int32_t> prev_pos(rows), next_pos(rows), stack;
  stack.reserve(64);
  for (std::int32_t r = 0; r < rows; ++r) {
    while (!stack.empty() && stack.back() > sa[r]) stack.pop_back();
    prev_pos[r] = stack.empty() ? -1 : stack.back();
    stack.push_back(sa[r]);
  }
  stack.clear();
  for (std::int32_t r = rows - 1; r >= 0; --r) {
    while (!stack.empty() && stack.back() > sa[r]) stack.pop_back();
    next_pos[r] = stack.empty() ? -1 : stack.back();
    stack.push_back(sa[r]);
  }

  std::vector<MsEntry> lpf(blen);
  for (std::int64_t j = 0; j < blen; ++j) {
    const std::int32_t r = isa[j];
    std::int64_t best_len = 0, best_pos = -1;
    if (prev_pos[r] >= 0) {
      best_len = idx.suffix_lcp(j, prev_pos[r]);
      best_pos = prev_pos[r];
    }
    if (next_pos[r] >= 0) {
      const std::int64_t len = idx.suffix_lcp(j, next_pos[r]);
      if (len > best_len) {
        best_len = len;
        best_pos = next_pos[r];
      }
    }
    if (best_len > 0) lpf[j] = {best_pos, best_len};
  }
  return lpf;
}

std::vector<MsEntry> merge_lpf(std::span<const MsEntry> prefix_ms,
                               std::span<const MsEntry> block_lpf,
                               std::int64_t block_begin) {
  assert(prefix_ms.size() == block_lpf.size());
  std::vector<MsEntry> merged(prefix_ms.size());
  for (std::size_t j = 0; j < merged.size(); ++j) {
    const MsEntry& from_prefix = prefix_ms[j];
    const MsEntry& in_block = block_lpf[j];
    if (from_prefix.len >= in_block.len) {
      merged[j] = from_prefix;
    } else {
      merged[j] = {block_begin + in_block.pos, in_block.len};
    }
  }
  return merged;
}

std::optional<std::int64_t> factorize_block(std::span<const MsEntry> lpf,
                                            std::span<const std::uint8_t> text,
                                            std::int64_t begin,
                                            std::int64_t end,
                                            std::int64_t carry,
                                            std::vector<Phrase>& out) {
  const bool last_block = end == static_cast<std::int64_t>(text.size());
  std::int64_t i = std::max(begin, carry);
  while (i < end) {
    const MsEntry& e = lpf[i - begin];
    if (e.len <= 0) {
      out.push_back({static_cast<std::int64_t>(text[i]), 0});
      ++i;
      continue;
    }
    assert(i + e.len <= end);
    if (!last_block && i + e.len == end) return i;
    out.push_back({e.pos, e.len});
    i += e.len;
  }
  return std::nullopt;
}

Phrase extend_last_phrase(std::span<const std::uint8_t> text,
                          std::int64_t start, const Phrase& seed) {
  const std::int64_t n = static_cast<std::int64_t>(text.size());
  std::int64_t best = seed.len, best_pos = seed.pos;
  for (std::int64_t src = 0; src < start; ++src) {
    if (start + best >= n) break;  // nothing can beat a match to the end
    if (text[src + best] != text[start + best]) continue;
    std::int64_t len = 0;
    while (start + len < n && text[src + len] == text[start + len]) ++len;
    if (len > best) {
      best = len;
      best_pos = src;
    }
  }
  if (best == 0) return {static_cast<std::int64_t>(text[start]), 0};
  return {best_pos, best};
}

Factorization lz_parse(std::span<const std::uint8_t> text,
                       const ParseOptions& opts, ParseStats* stats) {
  if (text.empty()) throw std::invalid_argument("lz_parse: empty input");
  if (opts.block_size <= 0) {
    throw std::invalid_argument("lz_parse: block size must be positive");
  }
  const std::int64_t n = static_cast<std::int64_t>(text.size());
  const std::int64_t b = opts.block_size;

  const auto t0 = std::chrono::steady_clock::now();
  BitVector phrase_starts(n);
  Factorization fact;
  fact.text_length = n;
  std::size_t peak_block = 0;
  double peak_ratio = 0.0;
  std::int64_t carry = 0;

  for (std::int64_t begin = 0; begin < n; begin += b) {
    const std::int64_t end = std::min(begin + b, n);
    if (carry >= end) continue;  // a carried phrase covers this block
    const std::int64_t blen = end - begin;

    BlockIndex idx(text.subspan(begin, blen), opts.index);

    std::vector<MsEntry> prefix_ms;
    if (begin > 0) {
      InvertState inv(blen);
      MsScanOptions mo;
      mo.mode = opts.ms_mode;
      mo.start = ScanStart::kBlock;
      mo.skip = opts.skip;
      mo.skip_threshold = opts.skip_threshold;
      ms_scan(idx, text, begin, phrase_starts, mo,
              [&](std::int64_t i, const MsEntry& e) { inv.accumulate(i, e); });
      prefix_ms = inv.finalize(idx);
    } else {
      prefix_ms.assign(blen, MsEntry{});
    }

    std::vector<MsEntry> block_lpf = lpf_of_block(idx);
    std::vector<MsEntry> merged = merge_lpf(prefix_ms, block_lpf, begin);

    const std::size_t block_bytes =
        idx.size_bytes() +
        (prefix_ms.size() + block_lpf.size() + merged.size()) * sizeof(MsEntry);
    peak_block = std::max(peak_block, block_bytes);
    peak_ratio = std::max(
        peak_ratio, static_cast<double>(idx.size_bytes()) / blen);

    const std::size_t first_new = fact.phrases.size();
    const std::optional<std::int64_t> withheld =
        factorize_block(merged, text, begin, end, carry, fact.phrases);

    std::int64_t at = std::max(begin, carry);
    for (std::size_t k = first_new; k < fact.phrases.size(); ++k) {
      phrase_starts.set(at);
      at += std::max<std::int64_t>(fact.phrases[k].len, 1);
    }

    if (withheld) {
      const Phrase seed{merged[*withheld - begin].pos, end - *withheld};
      const Phrase grown = extend_last_phrase(text, *withheld, seed);
      fact.phrases.push_back(grown);
      phrase_starts.set(*withheld);
      carry = *withheld + grown.len;
    } else {
      carry = end;
    }
  }

  if (stats) {
    stats->text_length = n;
    stats->phrase_count = static_cast<std::int64_t>(fact.phrases.size());
    stats->seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    stats->peak_block_bytes = peak_block;
    stats->phrase_mark_bytes = phrase_starts.size_bytes();
    stats->peak_index_bytes_per_char = peak_ratio;
  }
  return fact;
}

std::vector<std::uint8_t> decode(const Factorization& f) {
  if (f.text_length < 1 || f.phrases.empty()) {
    throw MalformedParse("empty factorization");
  }
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(f.text_length));
  for (const Phrase& ph : f.phrases) {
    if (ph.len == 0) {
      if (ph.pos < 0 || ph.pos > 255) {
        throw MalformedParse("literal symbol out of range");
      }
      out.push_back(static_cast<std::uint8_t>(ph.pos));
    } else {
      if (ph.len < 0 || ph.pos < 0 ||
          ph.pos >= static_cast<std::int64_t>(out.size())) {
        throw MalformedParse("phrase source not strictly earlier");
      }
      for (std::int64_t k = 0; k < ph.len; ++k) {
        out.push_back(out[static_cast<std::size_t>(ph.pos + k)]);
      }
    }
    if (static_cast<std::int64_t>(out.size()) > f.text_length) {
      throw MalformedParse("phrases overrun the declared length");
    }
  }
  if (static_cast<std::int64_t>(out.size()) != f.text_length) {
    throw MalformedParse("phrases do not cover the declared length");
  }
  return out;
}

}  // namespace lzscan
