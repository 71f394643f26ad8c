#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stathyp {

// Compact byte encodings for canonical element forms. LEB128 for unsigned,
// zigzag+LEB128 for signed. Encodings are self-delimiting given the group spec.

class ByteWriter {
 public:
  void put_byte(std::uint8_t b) { out_.push_back(static_cast<char>(b)); }

  void put_uvarint(std::uint64_t v) {
    while (v >= 0x80) {
      put_byte(static_cast<std::uint8_t>(v) | 0x80);
      v >>= 7;
    }
    put_byte(static_cast<std::uint8_t>(v));
  }

  void put_svarint(std::int64_t v) {
    put_uvarint((static_cast<std::uint64_t>(v) << 1) ^
                static_cast<std::uint64_t>(v >> 63));
  }

  void append(std::string_view bytes) { out_.append(bytes); }

  const std::string& str() const { return out_; }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

class ByteReader {
 public:
  explicit ByteReader(std::string_view data) : data_(data) {}

  std::uint8_t get_byte() {
    if (pos_ >= data_.size()) throw std::runtime_error("encoding truncated");
    return static_cast<std::uint8_t>(data_[pos_++]);
  }

  std::uint64_t get_uvarint() {
    std::uint64_t v = 0;
    int shift = 0;
    for (;;) {
      std::uint8_t b = get_byte();
      if (shift >= 63 && (b & 0x7f) > 1) throw std::runtime_error("varint overflow");
      v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
      if (!(b & 0x80)) return v;
      shift += 7;
    }
  }

  std::int64_t get_svarint() {
    std::uint64_t u = get_uvarint();
    return static_cast<std::int64_t>((u >> 1) ^ (~(u & 1) + 1));
  }

  bool exhausted() const { return pos_ == data_.size(); }
  std::size_t position() const { return pos_; }

 private:
  std::string_view data_;
  std::size_t pos_ = 0;
};

inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (char c : bytes) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace stathyp
