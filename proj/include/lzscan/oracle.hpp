////////////////////////////////////////////////////////////////////////////////
// oracle.hpp
//   Brute-force reference implementations, written for obviousness rather
//   than speed.  Tests compare the real code against these on small inputs.
////////////////////////////////////////////////////////////////////////////////

#ifndef LZSCAN_ORACLE_HPP
#define LZSCAN_ORACLE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lzscan/lpf_parse.hpp"
#include "lzscan/matching_stats.hpp"

namespace lzscan {

// Matching statistics of pattern against reference by direct comparison:
// entry i is the longest prefix of pattern[i..] occurring anywhere in
// reference, with the leftmost such occurrence.
std::vector<MsEntry> brute_ms(std::span<const std::uint8_t> pattern,
                              std::span<const std::uint8_t> reference);

// Longest previous factor by trying every earlier start, leftmost winner.
std::vector<MsEntry> brute_lpf(std::span<const std::uint8_t> text);

// Greedy left-to-right parse into longest previous factors.
Factorization brute_lz(std::span<const std::uint8_t> text);

}  // namespace lzscan

#endif  // LZSCAN_ORACLE_HPP
