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

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "evss/bits.hpp"

namespace evss {

/// Source of uniformly random bytes. Implementations are not thread-safe;
/// the caller owns the instance and its sharing discipline.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;

  /// `nbits` uniform bits: ceil(nbits/8) bytes are drawn and the unused high
  /// bits of the final byte are cleared.
  BitString bits(std::size_t nbits);
  std::uint64_t uint_bits(unsigned nbits);
};

/// Operating-system entropy (libsodium randombytes).
class SystemRandom final : public RandomSource {
 public:
  SystemRandom();
  void fill(std::span<std::uint8_t> out) override;
};

/// Deterministic generator: ChaCha20 (IETF variant) keystream keyed by a
/// 32-byte seed with an all-zero nonce, consumed front to back.
class ChaChaRandom final : public RandomSource {
 public:
  using Seed = std::array<std::uint8_t, 32>;
  explicit ChaChaRandom(const Seed& seed);
  /// Seed from 64 hex digits.
  static ChaChaRandom from_hex(std::string_view hex);
  /// Test convenience: seed = little-endian `value` zero-padded to 32 bytes.
  static ChaChaRandom from_u64(std::uint64_t value);

  void fill(std::span<std::uint8_t> out) override;

 private:
  void refill();

  Seed key_;
  std::uint32_t block_counter_ = 0;
  std::array<std::uint8_t, 64 * 16> buffer_{};
  std::size_t pos_ = sizeof(buffer_);
};

}  // namespace evss
