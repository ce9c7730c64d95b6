// Copyright 2026 The evss Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "evss/bigint.hpp"

namespace evss {

/// Fixed-length bit string, little-endian within and across bytes. Bits past
/// `size()` in the last byte are always zero.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t nbits) : nbits_(nbits), bytes_((nbits + 7) / 8, 0) {}

  static BitString from_uint(std::uint64_t value, std::size_t nbits);
  static BitString from_biguint(const BigUint& value, std::size_t nbits);
  static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits);

  std::size_t size() const { return nbits_; }
  std::span<const std::uint8_t> bytes() const { return bytes_; }

  bool bit(std::size_t i) const { return (bytes_[i / 8] >> (i % 8)) & 1u; }
  void set_bit(std::size_t i, bool v);

  /// Reads bits [offset, offset + count) as an integer; count <= 64.
  std::uint64_t read_uint(std::size_t offset, unsigned count) const;
  BigUint to_biguint() const;

  /// Zero-extends or truncates to `nbits`.
  BitString resized(std::size_t nbits) const;

  BitString& operator^=(const BitString& other);
  friend BitString operator^(BitString a, const BitString& b) { return a ^= b; }
  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint8_t> bytes_;
};

/// Appends bit fields into a growing BitString-compatible buffer.
class BitWriter {
 public:
  void put(std::uint64_t value, unsigned count);
  void put(const BitString& bits);
  std::size_t size() const { return nbits_; }
  /// Packs the written bits into an integer; requires size() <= 64.
  std::uint64_t as_uint() const;
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint8_t> bytes_;
};

}  // namespace evss
