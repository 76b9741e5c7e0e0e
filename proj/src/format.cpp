////////////////////////////////////////////////////////////////////////////////
// format.cpp
////////////////////////////////////////////////////////////////////////////////

#include "lzscan/format.hpp"

#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>

namespace lzscan {

namespace {

constexpr char kMagic[4] = {'L', 'Z', 'S', 'C'};
constexpr char kVersion = 0x01;

void put_u64(std::ostream& out, std::uint64_t v) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>(v >> (8 * i));
  out.write(buf, 8);
}

std::uint64_t get_u64(std::istream& in) {
  char buf[8];
  if (!in.read(buf, 8)) throw MalformedParse("truncated binary parse file");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(buf[i]))
         << (8 * i);
  }
  return v;
}

std::int64_t to_i64(std::uint64_t v, const char* what) {
  if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw MalformedParse(std::string(what) + " out of range");
  }
  return static_cast<std::int64_t>(v);
}

// On disk, non-literal sources are 1-based.
std::uint64_t stored_pos(const Phrase& ph) {
  return static_cast<std::uint64_t>(ph.len > 0 ? ph.pos + 1 : ph.pos);
}

Phrase loaded_phrase(std::int64_t p, std::int64_t len) {
  if (len < 0 || p < 0) throw MalformedParse("negative phrase field");
  if (len == 0) return {p, 0};
  if (p == 0) throw MalformedParse("zero source position");
  return {p - 1, len};
}

}  // namespace

void write_parse(std::ostream& out, const Factorization& f, ParseFormat fmt) {
  if (fmt == ParseFormat::kText) {
    for (const Phrase& ph : f.phrases) {
      out << stored_pos(ph) << ' ' << ph.len << '\n';
    }
    return;
  }
  out.write(kMagic, 4);
  out.put(kVersion);
  put_u64(out, static_cast<std::uint64_t>(f.text_length));
  put_u64(out, f.phrases.size());
  for (const Phrase& ph : f.phrases) {
    put_u64(out, stored_pos(ph));
    put_u64(out, static_cast<std::uint64_t>(ph.len));
  }
}

Factorization read_parse(std::istream& in, ParseFormat fmt) {
  Factorization f;
  if (fmt == ParseFormat::kText) {
    std::int64_t p = 0, len = 0;
    while (in >> p) {
      if (!(in >> len)) throw MalformedParse("odd number of fields");
      f.phrases.push_back(loaded_phrase(p, len));
      f.text_length += len == 0 ? 1 : len;
    }
    if (!in.eof()) throw MalformedParse("non-numeric data in text parse file");
    return f;
  }

  char head[5];
  if (!in.read(head, 5)) throw MalformedParse("truncated binary parse file");
  if (head[0] != kMagic[0] || head[1] != kMagic[1] || head[2] != kMagic[2] ||
      head[3] != kMagic[3]) {
    throw MalformedParse("bad magic");
  }
  if (head[4] != kVersion) throw MalformedParse("unsupported version");
  f.text_length = to_i64(get_u64(in), "text length");
  const std::int64_t z = to_i64(get_u64(in), "phrase count");
  f.phrases.reserve(static_cast<std::size_t>(z));
  for (std::int64_t k = 0; k < z; ++k) {
    const std::int64_t p = to_i64(get_u64(in), "source position");
    const std::int64_t len = to_i64(get_u64(in), "phrase length");
    f.phrases.push_back(loaded_phrase(p, len));
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw MalformedParse("trailing data after phrase records");
  }
  return f;
}

ParseFormat detect_format(std::istream& in) {
  char head[4] = {};
  in.read(head, 4);
  const bool is_binary = in.gcount() == 4 && head[0] == kMagic[0] &&
                         head[1] == kMagic[1] && head[2] == kMagic[2] &&
                         head[3] == kMagic[3];
  in.clear();
  in.seekg(0);
  return is_binary ? ParseFormat::kBinary : ParseFormat::kText;
}

}  // namespace lzscan
