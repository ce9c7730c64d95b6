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

#include "evss/bits.hpp"

#include <algorithm>

#include "evss/errors.hpp"

namespace evss {

BitString BitString::from_uint(std::uint64_t value, std::size_t nbits) {
  BitString out(nbits);
  for (std::size_t i = 0; i < nbits && i < 64; ++i) {
    if ((value >> i) & 1u) out.set_bit(i, true);
  }
  return out;
}

BitString BitString::from_biguint(const BigUint& value, std::size_t nbits) {
  BitString out(nbits);
  for (std::size_t i = 0; i < nbits; ++i) {
    if (boost::multiprecision::bit_test(value, static_cast<unsigned>(i))) out.set_bit(i, true);
  }
  return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits) {
  if (bytes.size() != (nbits + 7) / 8) throw ParameterError("bit string byte length mismatch");
  BitString out(nbits);
  std::copy(bytes.begin(), bytes.end(), out.bytes_.begin());
  if (nbits % 8 != 0 && !out.bytes_.empty()) {
    std::uint8_t mask = static_cast<std::uint8_t>((1u << (nbits % 8)) - 1u);
    if (out.bytes_.back() & ~mask) throw ParameterError("nonzero padding bits");
  }
  return out;
}

void BitString::set_bit(std::size_t i, bool v) {
  auto m = static_cast<std::uint8_t>(1u << (i % 8));
  if (v) {
    bytes_[i / 8] |= m;
  } else {
    bytes_[i / 8] &= static_cast<std::uint8_t>(~m);
  }
}

std::uint64_t BitString::read_uint(std::size_t offset, unsigned count) const {
  std::uint64_t v = 0;
  for (unsigned k = 0; k < count; ++k) {
    if (offset + k < nbits_ && bit(offset + k)) v |= std::uint64_t{1} << k;
  }
  return v;
}

BigUint BitString::to_biguint() const {
  BigUint v = 0;
  for (std::size_t i = bytes_.size(); i-- > 0;) {
    v <<= 8;
    v |= bytes_[i];
  }
  return v;
}

BitString BitString::resized(std::size_t nbits) const {
  BitString out(nbits);
  std::size_t n = std::min(nbits, nbits_);
  for (std::size_t i = 0; i < n; ++i) {
    if (bit(i)) out.set_bit(i, true);
  }
  return out;
}

BitString& BitString::operator^=(const BitString& other) {
  if (other.nbits_ != nbits_) throw ParameterError("xor of bit strings with different lengths");
  for (std::size_t i = 0; i < bytes_.size(); ++i) bytes_[i] ^= other.bytes_[i];
  return *this;
}

void BitWriter::put(std::uint64_t value, unsigned count) {
  for (unsigned k = 0; k < count; ++k) {
    if (nbits_ % 8 == 0) bytes_.push_back(0);
    if ((value >> k) & 1u) bytes_.back() |= static_cast<std::uint8_t>(1u << (nbits_ % 8));
    ++nbits_;
  }
}

void BitWriter::put(const BitString& bits) {
  for (std::size_t i = 0; i < bits.size(); ++i) put(bits.bit(i) ? 1u : 0u, 1);
}

std::uint64_t BitWriter::as_uint() const {
  if (nbits_ > 64) throw ParameterError("bit writer holds more than 64 bits");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < bytes_.size(); ++i) v |= std::uint64_t{bytes_[i]} << (8 * i);
  return v;
}

}  // namespace evss
