#include "oamq/bits.hpp"

#include <bit>
#include <cstdio>
#include <stdexcept>

namespace oamq {

namespace {

// Reverses the bit order of one byte; bridges the LSB-first in-memory layout
// and the MSB-first on-disk byte layout.
uint8_t reverse8(uint8_t b) {
  b = static_cast<uint8_t>((b & 0xF0u) >> 4 | (b & 0x0Fu) << 4);
  b = static_cast<uint8_t>((b & 0xCCu) >> 2 | (b & 0x33u) << 2);
  b = static_cast<uint8_t>((b & 0xAAu) >> 1 | (b & 0x55u) << 1);
  return b;
}

}  // namespace

void BitBuffer::append(const BitBuffer& other) {
  const size_t shift = nbits_ & 63;
  words_.reserve((nbits_ + other.nbits_ + 63) / 64);
  if (shift == 0) {
    words_.insert(words_.end(), other.words_.begin(), other.words_.end());
  } else {
    for (size_t k = 0; k < other.words_.size(); ++k) {
      words_.back() |= other.words_[k] << shift;
      words_.push_back(other.words_[k] >> (64 - shift));
    }
  }
  nbits_ += other.nbits_;
  words_.resize((nbits_ + 63) / 64);
  if (nbits_ & 63) words_.back() &= (uint64_t{1} << (nbits_ & 63)) - 1;
}

uint64_t BitBuffer::count_ones() const {
  uint64_t total = 0;
  for (uint64_t w : words_) total += static_cast<uint64_t>(std::popcount(w));
  return total;
}

BitBuffer BitBuffer::from_words(std::vector<uint64_t> words, size_t nbits) {
  BitBuffer out;
  out.nbits_ = nbits;
  out.words_ = std::move(words);
  out.words_.resize((nbits + 63) / 64);
  if (nbits & 63) out.words_.back() &= (uint64_t{1} << (nbits & 63)) - 1;
  return out;
}

bool BitBuffer::operator==(const BitBuffer& other) const {
  return nbits_ == other.nbits_ && words_ == other.words_;
}

BitBuffer BitBuffer::operator^(const BitBuffer& other) const {
  if (nbits_ != other.nbits_) throw std::invalid_argument("BitBuffer xor: size mismatch");
  std::vector<uint64_t> w(words_.size());
  for (size_t k = 0; k < w.size(); ++k) w[k] = words_[k] ^ other.words_[k];
  return from_words(std::move(w), nbits_);
}

void BitBuffer::write_file(const std::string& path) const {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  const size_t nbytes = (nbits_ + 7) / 8;
  std::vector<uint8_t> buf(nbytes);
  for (size_t j = 0; j < nbytes; ++j) {
    const uint64_t w = words_[j >> 3];
    buf[j] = reverse8(static_cast<uint8_t>(w >> ((j & 7) * 8)));
  }
  const size_t written = std::fwrite(buf.data(), 1, buf.size(), f);
  std::fclose(f);
  if (written != buf.size()) throw std::runtime_error("short write: " + path);
}

BitBuffer BitBuffer::read_file(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw std::runtime_error("cannot open for read: " + path);
  std::fseek(f, 0, SEEK_END);
  const long sz = std::ftell(f);
  std::fseek(f, 0, SEEK_SET);
  std::vector<uint8_t> buf(static_cast<size_t>(sz));
  const size_t got = std::fread(buf.data(), 1, buf.size(), f);
  std::fclose(f);
  if (got != buf.size()) throw std::runtime_error("short read: " + path);

  BitBuffer out;
  out.nbits_ = buf.size() * 8;
  out.words_.assign((out.nbits_ + 63) / 64, 0);
  for (size_t j = 0; j < buf.size(); ++j) {
    out.words_[j >> 3] |= uint64_t{reverse8(buf[j])} << ((j & 7) * 8);
  }
  return out;
}

}  // namespace oamq
