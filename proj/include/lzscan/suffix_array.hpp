////////////////////////////////////////////////////////////////////////////////
// suffix_array.hpp
//   Suffix array and LCP array construction for a single block.
////////////////////////////////////////////////////////////////////////////////

#ifndef LZSCAN_SUFFIX_ARRAY_HPP
#define LZSCAN_SUFFIX_ARRAY_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace lzscan {

// Suffix array of block#, where # is a virtual sentinel smaller than every
// symbol.  The result has block.size() + 1 entries; the entry equal to
// block.size() names the sentinel-only suffix and always sits at rank 0.
std::vector<std::int32_t> build_suffix_array(std::span<const std::uint8_t> block);

// lcp[0] = 0 and lcp[r] = |longest common prefix of the suffixes at ranks
// r-1 and r|.  The sentinel never matches a symbol, so values stay < |block|.
std::vector<std::int32_t> build_lcp_array(std::span<const std::uint8_t> block,
                                          std::span<const std::int32_t> sa);

}  // namespace lzscan

#endif  // LZSCAN_SUFFIX_ARRAY_HPP
