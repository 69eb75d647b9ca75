#pragma once
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace oamq {

// Packed bit vector. Bit i lives in word i/64 at position i%64 (LSB first);
// tail bits of the last word are kept zero. File serialization packs bits
// most-significant-bit-first into bytes, zero-padded at the end.
class BitBuffer {
public:
  BitBuffer() = default;
  explicit BitBuffer(size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(size_t i, bool v) {
    const uint64_t m = uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }

  void push_back(bool v) {
    if ((nbits_ & 63) == 0) words_.push_back(0);
    if (v) words_[nbits_ >> 6] |= uint64_t{1} << (nbits_ & 63);
    ++nbits_;
  }

  // Appends the low `width` bits of `value`, most significant bit first.
  void append_field(uint64_t value, int width) {
    for (int b = width - 1; b >= 0; --b) push_back((value >> b) & 1u);
  }

  // Word-level append of another buffer.
  void append(const BitBuffer& other);

  std::vector<uint64_t>& words() { return words_; }
  const std::vector<uint64_t>& words() const { return words_; }

  uint64_t count_ones() const;

  // Takes ownership of raw words; bits beyond nbits are cleared.
  static BitBuffer from_words(std::vector<uint64_t> words, size_t nbits);

  bool operator==(const BitBuffer& other) const;
  bool operator!=(const BitBuffer& other) const { return !(*this == other); }

  BitBuffer operator^(const BitBuffer& other) const;

  void write_file(const std::string& path) const;
  static BitBuffer read_file(const std::string& path);

private:
  size_t nbits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace oamq
