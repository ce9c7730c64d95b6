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

#include <gtest/gtest.h>

#include "evss/bits.hpp"
#include "evss/errors.hpp"
#include "evss/random.hpp"

using namespace evss;

TEST(Bits, FromBytesChecksLengthAndPadding) {
  const std::uint8_t ok[] = {0xFF, 0x01};
  const BitString b = BitString::from_bytes(ok, 9);
  EXPECT_EQ(b.size(), 9u);
  EXPECT_TRUE(b.bit(8));
  EXPECT_EQ(b.read_uint(0, 9), 0x1FFu);
  const std::uint8_t padded[] = {0xFF, 0x03};
  EXPECT_THROW(BitString::from_bytes(padded, 9), ParameterError);
  EXPECT_THROW(BitString::from_bytes(ok, 17), ParameterError);
}

TEST(Bits, XorResizeAndWriter) {
  const BitString a = BitString::from_uint(0b1011, 4), b = BitString::from_uint(0b0110, 4);
  EXPECT_EQ((a ^ b).read_uint(0, 4), 0b1101u);
  EXPECT_THROW(a ^ BitString(5), ParameterError);
  EXPECT_EQ(a.resized(9).read_uint(0, 9), 0b1011u);
  EXPECT_EQ(a.resized(2).read_uint(0, 2), 0b11u);
  const BigUint big = (BigUint(1) << 100) + 12345;
  EXPECT_EQ(BitString::from_biguint(big, 101).to_biguint(), big);

  BitWriter w;
  w.put(0b101, 3);
  w.put(BitString::from_uint(0b11, 2));
  w.put(1, 1);
  EXPECT_EQ(w.size(), 6u);
  EXPECT_EQ(w.as_uint(), 0b111101u);
}

TEST(Random, ChaChaKnownAnswer) {
  // ChaCha20 block 0 for the all-zero key and nonce.
  ChaChaRandom rng(ChaChaRandom::Seed{});
  std::uint8_t out[8];
  rng.fill(out);
  const std::uint8_t expect[8] = {0x76, 0xb8, 0xe0, 0xad, 0xa0, 0xf1, 0x3d, 0x90};
  EXPECT_TRUE(std::equal(std::begin(out), std::end(out), std::begin(expect)));
}

TEST(Random, SeedParsingAndDeterminism) {
  const std::string hex(64, 'a');
  ChaChaRandom a = ChaChaRandom::from_hex(hex), b = ChaChaRandom::from_hex(hex);
  for (int i = 0; i < 3000; ++i) ASSERT_EQ(a.uint_bits(13), b.uint_bits(13));
  EXPECT_THROW(ChaChaRandom::from_hex("abc"), ParameterError);
  EXPECT_THROW(ChaChaRandom::from_hex(std::string(63, '0') + "g"), ParameterError);
  const BitString bits = a.bits(11);
  EXPECT_EQ(bits.size(), 11u);
  EXPECT_EQ(bits.bytes()[1] >> 3, 0);
}

TEST(Random, SystemSourceProducesBytes) {
  SystemRandom rng;
  std::uint8_t a[32] = {}, b[32] = {};
  rng.fill(a);
  rng.fill(b);
  EXPECT_FALSE(std::equal(std::begin(a), std::end(a), std::begin(b)));
}
