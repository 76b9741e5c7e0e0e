////////////////////////////////////////////////////////////////////////////////
// format.hpp
//   Factorization file formats.  Text: one "p len" line per phrase.
//   Binary: "LZSC" magic, a version byte, n and z as 64-bit little-endian
//   words, then z records of two such words.  Both store source positions
//   1-based; literals store the symbol code with len = 0.
////////////////////////////////////////////////////////////////////////////////

#ifndef LZSCAN_FORMAT_HPP
#define LZSCAN_FORMAT_HPP

#include <iosfwd>

#include "lzscan/lpf_parse.hpp"

namespace lzscan {

enum class ParseFormat { kText, kBinary };

void write_parse(std::ostream& out, const Factorization& f, ParseFormat fmt);

// Throws MalformedParse on anything that is not a well-formed file of the
// given format; field-level validity is left to decode().
Factorization read_parse(std::istream& in, ParseFormat fmt);

// Decide by content: binary when the stream begins with the magic.
// Leaves the stream positioned at the start.
ParseFormat detect_format(std::istream& in);

}  // namespace lzscan

#endif  // LZSCAN_FORMAT_HPP
