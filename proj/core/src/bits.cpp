#include "indsub/bits.hpp"

#include <bit>

#include "indsub/errors.hpp"

namespace indsub {

BitString zero_bits(std::size_t length) { return BitString(length, false); }

std::string to_hex(const BitString& bits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve((bits.size() + 3) / 4);
  for (std::size_t base = 0; base < bits.size(); base += 4) {
    unsigned digit = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      digit <<= 1;
      if (base + k < bits.size() && bits[base + k]) digit |= 1;
    }
    out.push_back(kDigits[digit]);
  }
  return out;
}

BitString from_hex(std::string_view hex, std::size_t length) {
  if (hex.size() != (length + 3) / 4) {
    throw InputError("hex string '" + std::string(hex) + "' does not encode " +
                     std::to_string(length) + " bits");
  }
  BitString bits(length, false);
  for (std::size_t d = 0; d < hex.size(); ++d) {
    char c = hex[d];
    unsigned digit;
    if (c >= '0' && c <= '9') {
      digit = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      digit = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      digit = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw InputError("invalid hex digit '" + std::string(1, c) + "'");
    }
    for (std::size_t k = 0; k < 4; ++k) {
      bool set = (digit >> (3 - k)) & 1U;
      std::size_t index = 4 * d + k;
      if (index < length) {
        bits[index] = set;
      } else if (set) {
        throw InputError("hex string has nonzero padding bits");
      }
    }
  }
  return bits;
}

std::string to_binary(const BitString& bits) {
  std::string out;
  out.reserve(bits.size());
  for (bool b : bits) out.push_back(b ? '1' : '0');
  return out;
}

BitString from_binary(std::string_view text) {
  BitString bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw InputError("invalid binary digit '" + std::string(1, c) + "'");
    bits.push_back(c == '1');
  }
  return bits;
}

unsigned id_width(std::size_t count) {
  if (count <= 2) return 1;
  return static_cast<unsigned>(std::bit_width(count - 1));
}

void BitBuffer::push_bit(bool bit) {
  if (size_ % 64 == 0) words_.push_back(0);
  if (bit) words_[size_ / 64] |= std::uint64_t{1} << (size_ % 64);
  ++size_;
}

void BitBuffer::push(std::uint64_t value, unsigned width) {
  if (width < 64 && (value >> width) != 0) {
    throw InternalError("value " + std::to_string(value) + " does not fit in " +
                        std::to_string(width) + " bits");
  }
  for (unsigned k = width; k-- > 0;) push_bit((value >> k) & 1U);
}

void BitBuffer::append(const BitBuffer& other) { append(other, 0, other.size()); }

void BitBuffer::append(const BitBuffer& other, std::size_t offset, std::size_t count) {
  if (offset + count > other.size()) throw InternalError("BitBuffer::append out of range");
  for (std::size_t i = 0; i < count; ++i) push_bit(other.bit(offset + i));
}

bool BitBuffer::bit(std::size_t index) const {
  if (index >= size_) throw InternalError("BitBuffer::bit out of range");
  return (words_[index / 64] >> (index % 64)) & 1U;
}

std::uint64_t BitBuffer::read(std::size_t offset, unsigned width) const {
  if (width > 64 || offset + width > size_) throw InternalError("BitBuffer::read out of range");
  std::uint64_t value = 0;
  for (unsigned k = 0; k < width; ++k) value = (value << 1) | (bit(offset + k) ? 1U : 0U);
  return value;
}

void BitBuffer::consume_front(std::size_t count) {
  if (count > size_) throw InternalError("BitBuffer::consume_front out of range");
  if (count == 0) return;
  BitBuffer rest;
  rest.append(*this, count, size_ - count);
  *this = std::move(rest);
}

bool operator==(const BitBuffer& a, const BitBuffer& b) {
  if (a.size_ != b.size_) return false;
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (a.bit(i) != b.bit(i)) return false;
  }
  return true;
}

std::uint64_t BitReader::read(unsigned width) {
  std::uint64_t value = buffer_->read(pos_, width);
  pos_ += width;
  return value;
}

}  // namespace indsub
