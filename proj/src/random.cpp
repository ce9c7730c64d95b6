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

#include "evss/random.hpp"

#include <sodium.h>

#include <cstring>

#include "evss/errors.hpp"

namespace evss {
namespace {

void ensure_sodium() {
  static const bool ok = sodium_init() >= 0;
  if (!ok) throw Error("libsodium initialization failed");
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitString RandomSource::bits(std::size_t nbits) {
  std::vector<std::uint8_t> raw((nbits + 7) / 8);
  fill(raw);
  if (nbits % 8 != 0) raw.back() &= static_cast<std::uint8_t>((1u << (nbits % 8)) - 1u);
  return BitString::from_bytes(raw, nbits);
}

std::uint64_t RandomSource::uint_bits(unsigned nbits) {
  if (nbits > 64) throw ParameterError("uint_bits: at most 64 bits");
  return bits(nbits).read_uint(0, nbits);
}

SystemRandom::SystemRandom() { ensure_sodium(); }

void SystemRandom::fill(std::span<std::uint8_t> out) { randombytes_buf(out.data(), out.size()); }

ChaChaRandom::ChaChaRandom(const Seed& seed) : key_(seed) { ensure_sodium(); }

ChaChaRandom ChaChaRandom::from_hex(std::string_view hex) {
  if (hex.size() != 64) throw ParameterError("seed must be exactly 64 hex digits (32 bytes)");
  Seed seed{};
  for (std::size_t i = 0; i < 32; ++i) {
    int hi = hex_value(hex[2 * i]);
    int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw ParameterError("seed contains a non-hex character");
    seed[i] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return ChaChaRandom(seed);
}

ChaChaRandom ChaChaRandom::from_u64(std::uint64_t value) {
  Seed seed{};
  for (int i = 0; i < 8; ++i) seed[i] = static_cast<std::uint8_t>(value >> (8 * i));
  return ChaChaRandom(seed);
}

void ChaChaRandom::refill() {
  static constexpr std::array<std::uint8_t, crypto_stream_chacha20_ietf_NONCEBYTES> kNonce{};
  std::memset(buffer_.data(), 0, buffer_.size());
  crypto_stream_chacha20_ietf_xor_ic(buffer_.data(), buffer_.data(), buffer_.size(), kNonce.data(),
                                     block_counter_, key_.data());
  block_counter_ += static_cast<std::uint32_t>(buffer_.size() / 64);
  pos_ = 0;
}

void ChaChaRandom::fill(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    if (pos_ == buffer_.size()) refill();
    std::size_t n = std::min(out.size() - done, buffer_.size() - pos_);
    std::memcpy(out.data() + done, buffer_.data() + pos_, n);
    pos_ += n;
    done += n;
  }
}

}  // namespace evss
