////////////////////////////////////////////////////////////////////////////////
// oracle.cpp
////////////////////////////////////////////////////////////////////////////////

#include "lzscan/oracle.hpp"

namespace lzscan {

std::vector<MsEntry> brute_ms(std::span<const std::uint8_t> pattern,
                              std::span<const std::uint8_t> reference) {
  const std::int64_t np = static_cast<std::int64_t>(pattern.size());
  const std::int64_t nr = static_cast<std::int64_t>(reference.size());
  std::vector<MsEntry> ms(np);
  for (std::int64_t i = 0; i < np; ++i) {
    for (std::int64_t q = 0; q < nr; ++q) {
      std::int64_t len = 0;
      while (i + len < np && q + len < nr &&
             pattern[i + len] == reference[q + len]) {
        ++len;
      }
      if (len > ms[i].len) ms[i] = {q, len};
    }
  }
  return ms;
}

std::vector<MsEntry> brute_lpf(std::span<const std::uint8_t> text) {
  const std::int64_t n = static_cast<std::int64_t>(text.size());
  // ext[i][j] = common prefix length of text[i..] and text[j..]
  std::vector<std::vector<std::int32_t>> ext(
      n + 1, std::vector<std::int32_t>(n + 1, 0));
  for (std::int64_t i = n - 1; i >= 0; --i) {
    for (std::int64_t j = n - 1; j >= 0; --j) {
      if (text[i] == text[j]) ext[i][j] = ext[i + 1][j + 1] + 1;
    }
  }
  std::vector<MsEntry> lpf(n);
  for (std::int64_t j = 0; j < n; ++j) {
    for (std::int64_t q = 0; q < j; ++q) {
      if (ext[q][j] > lpf[j].len) lpf[j] = {q, ext[q][j]};
    }
  }
  return lpf;
}

Factorization brute_lz(std::span<const std::uint8_t> text) {
  const std::vector<MsEntry> lpf = brute_lpf(text);
  Factorization fact;
  fact.text_length = static_cast<std::int64_t>(text.size());
  std::int64_t i = 0;
  while (i < fact.text_length) {
    if (lpf[i].len == 0) {
      fact.phrases.push_back({static_cast<std::int64_t>(text[i]), 0});
      ++i;
    } else {
      fact.phrases.push_back({lpf[i].pos, lpf[i].len});
      i += lpf[i].len;
    }
  }
  return fact;
}

}  // namespace lzscan
