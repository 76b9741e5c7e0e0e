////////////////////////////////////////////////////////////////////////////////
// bitvector.hpp
//   Plain fixed-size bitvector, one bit per text position.
////////////////////////////////////////////////////////////////////////////////

#ifndef LZSCAN_BITVECTOR_HPP
#define LZSCAN_BITVECTOR_HPP

#include <cstdint>
#include <vector>

namespace lzscan {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::int64_t n) : n_(n), words_((n + 63) / 64, 0) {}

  void set(std::int64_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  bool get(std::int64_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  std::int64_t size() const { return n_; }
  std::size_t size_bytes() const { return words_.size() * sizeof(std::uint64_t); }

 private:
  std::int64_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace lzscan

#endif  // LZSCAN_BITVECTOR_HPP
