#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace indsub {

// Two-party input strings. Index 0 is the first bit of the string.
using BitString = std::vector<bool>;

BitString zero_bits(std::size_t length);

// Hex codec for BitStrings: bits are grouped four per digit, left to right,
// the first bit of each group being the digit's most significant bit. The
// tail group is zero-padded, so the length must be supplied when decoding.
std::string to_hex(const BitString& bits);
BitString from_hex(std::string_view hex, std::size_t length);

// "0110..." form, mostly for diagnostics.
std::string to_binary(const BitString& bits);
BitString from_binary(std::string_view text);

// Number of bits needed to write any value in [0, count), at least 1.
unsigned id_width(std::size_t count);

// A growable bit sequence. Used as message payload and as the wire format of
// the two-party protocols. Fields are written most-significant bit first.
class BitBuffer {
 public:
  BitBuffer() = default;

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  void push_bit(bool bit);
  void push(std::uint64_t value, unsigned width);
  void append(const BitBuffer& other);
  void append(const BitBuffer& other, std::size_t offset, std::size_t count);

  bool bit(std::size_t index) const;
  std::uint64_t read(std::size_t offset, unsigned width) const;

  // Drops the first `count` bits.
  void consume_front(std::size_t count);

  friend bool operator==(const BitBuffer& a, const BitBuffer& b);

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

// Sequential reader over a BitBuffer.
class BitReader {
 public:
  explicit BitReader(const BitBuffer& buffer, std::size_t offset = 0)
      : buffer_(&buffer), pos_(offset) {}

  std::size_t position() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return buffer_->size() - pos_; }
  bool can_read(std::size_t bits) const noexcept { return remaining() >= bits; }

  std::uint64_t read(unsigned width);
  bool read_bit() { return read(1) != 0; }

 private:
  const BitBuffer* buffer_;
  std::size_t pos_;
};

}  // namespace indsub
