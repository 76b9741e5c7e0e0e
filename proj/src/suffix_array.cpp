////////////////////////////////////////////////////////////////////////////////
// suffix_array.cpp
//   SA-IS suffix sorting plus the usual linear-time LCP construction.
////////////////////////////////////////////////////////////////////////////////

#include "lzscan/suffix_array.hpp"

#include <algorithm>

namespace lzscan {

namespace {

// Induced sorting over an integer string whose last symbol is a unique 0.
// Values lie in [0, sigma).  Recursion depth is logarithmic in n because the
// reduced problem is at most half the size.
void sais(const std::int32_t* text, std::int32_t* sa, std::int32_t n,
          std::int32_t sigma) {
  if (n == 1) {
    sa[0] = 0;
    return;
  }

  std::vector<std::uint8_t> stype(n);
  stype[n - 1] = 1;
  for (std::int32_t i = n - 2; i >= 0; --i) {
    stype[i] = text[i] < text[i + 1] ||
               (text[i] == text[i + 1] && stype[i + 1]);
  }
  auto is_lms = [&](std::int32_t i) {
    return i > 0 && stype[i] && !stype[i - 1];
  };

  std::vector<std::int32_t> bucket(sigma + 1, 0);
  for (std::int32_t i = 0; i < n; ++i) ++bucket[text[i] + 1];
  for (std::int32_t c = 0; c < sigma; ++c) bucket[c + 1] += bucket[c];

  // Seed LMS suffixes at bucket tails, then induce L-suffixes left to right
  // and S-suffixes right to left.
  auto induce = [&](const std::vector<std::int32_t>& seeds) {
    std::fill(sa, sa + n, -1);
    {
      std::vector<std::int32_t> tail(bucket.begin() + 1, bucket.end());
      for (std::int32_t k = static_cast<std::int32_t>(seeds.size()) - 1;
           k >= 0; --k) {
        std::int32_t p = seeds[k];
        sa[--tail[text[p]]] = p;
      }
    }
    {
      std::vector<std::int32_t> head(bucket.begin(), bucket.end() - 1);
      for (std::int32_t r = 0; r < n; ++r) {
        std::int32_t p = sa[r];
        if (p > 0 && !stype[p - 1]) sa[head[text[p - 1]]++] = p - 1;
      }
    }
    {
      std::vector<std::int32_t> tail(bucket.begin() + 1, bucket.end());
      for (std::int32_t r = n - 1; r >= 0; --r) {
        std::int32_t p = sa[r];
        if (p > 0 && stype[p - 1]) sa[--tail[text[p - 1]]] = p - 1;
      }
    }
  };

  std::vector<std::int32_t> lms;
  for (std::int32_t i = 1; i < n; ++i) {
    if (is_lms(i)) lms.push_back(i);
  }
  const std::int32_t m = static_cast<std::int32_t>(lms.size());

  // First round sorts the LMS substrings.
  induce(lms);

  std::vector<std::int32_t> sorted_lms;
  sorted_lms.reserve(m);
  for (std::int32_t r = 0; r < n; ++r) {
    if (is_lms(sa[r])) sorted_lms.push_back(sa[r]);
  }

  // Name LMS substrings; equal substrings share a name.
  auto lms_equal = [&](std::int32_t a, std::int32_t b) {
    if (text[a] != text[b]) return false;
    for (std::int32_t k = 1;; ++k) {
      bool al = is_lms(a + k);
      bool bl = is_lms(b + k);
      if (al && bl) return true;
      if (al != bl) return false;
      if (text[a + k] != text[b + k]) return false;
    }
  };
  std::vector<std::int32_t> name(n, -1);
  std::int32_t names = 0;
  for (std::int32_t k = 0; k < m; ++k) {
    if (k > 0 && !lms_equal(sorted_lms[k - 1], sorted_lms[k])) ++names;
    name[sorted_lms[k]] = names;
  }

  std::vector<std::int32_t> reduced(m), reduced_sa(m);
  for (std::int32_t k = 0; k < m; ++k) reduced[k] = name[lms[k]];
  if (names + 1 < m) {
    sais(reduced.data(), reduced_sa.data(), m, names + 1);
  } else {
    for (std::int32_t k = 0; k < m; ++k) reduced_sa[reduced[k]] = k;
  }

  // Second round with LMS suffixes in sorted order.
  std::vector<std::int32_t> seeds(m);
  for (std::int32_t k = 0; k < m; ++k) seeds[k] = lms[reduced_sa[k]];
  induce(seeds);
}

}  // namespace

std::vector<std::int32_t> build_suffix_array(
    std::span<const std::uint8_t> block) {
  const std::int32_t n = static_cast<std::int32_t>(block.size()) + 1;
  std::vector<std::int32_t> text(n);
  for (std::int32_t i = 0; i + 1 < n; ++i) text[i] = block[i] + 1;
  text[n - 1] = 0;
  std::vector<std::int32_t> sa(n);
  sais(text.data(), sa.data(), n, 257);
  return sa;
}

std::vector<std::int32_t> build_lcp_array(std::span<const std::uint8_t> block,
                                          std::span<const std::int32_t> sa) {
  const std::int32_t n = static_cast<std::int32_t>(sa.size());
  const std::int32_t b = static_cast<std::int32_t>(block.size());
  std::vector<std::int32_t> rank(n);
  for (std::int32_t r = 0; r < n; ++r) rank[sa[r]] = r;
  std::vector<std::int32_t> lcp(n, 0);
  std::int32_t k = 0;
  for (std::int32_t i = 0; i < n; ++i) {
    std::int32_t r = rank[i];
    if (r == 0) {
      k = 0;
      continue;
    }
    std::int32_t j = sa[r - 1];
    while (i + k < b && j + k < b && block[i + k] == block[j + k]) ++k;
    lcp[r] = k;
    if (k > 0) --k;
  }
  return lcp;
}

}  // namespace lzscan
