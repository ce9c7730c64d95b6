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

#include "evss/errors.hpp"
#include "evss/share_file.hpp"

using namespace evss;

namespace {

using Bytes = std::vector<std::uint8_t>;

EvolvingDealer seeded(std::uint64_t seed, const BaseElem& secret, GenerationLayout layout = GenerationLayout::paper()) {
  return make_dealer(secret, std::move(layout), std::make_unique<ChaChaRandom>(ChaChaRandom::from_u64(seed)));
}

Bytes varint_bytes(const BigUint& v) {
  Bytes out;
  varint::put(out, v);
  return out;
}

}  // namespace

TEST(Varint, Encodings) {
  EXPECT_EQ(varint_bytes(0), (Bytes{0x00}));
  EXPECT_EQ(varint_bytes(127), (Bytes{0x7F}));
  EXPECT_EQ(varint_bytes(128), (Bytes{0x80, 0x01}));
  EXPECT_EQ(varint_bytes(65537), (Bytes{0x81, 0x80, 0x04}));
  for (const BigUint& v : {BigUint(0), BigUint(300), pow2(64), pow2(64) + 1, pow2(256) - 1}) {
    const Bytes b = varint_bytes(v);
    std::size_t pos = 0;
    EXPECT_EQ(varint::get(b, pos), v);
    EXPECT_EQ(pos, b.size());
  }
  std::size_t pos = 0;
  EXPECT_THROW(varint::get(Bytes{0x80, 0x00}, pos), ParseError);
  pos = 0;
  EXPECT_THROW(varint::get(Bytes{0x80}, pos), ParseError);
}

TEST(ShareFile, GoldenLayoutOfASecondGenerationFile) {
  auto d = seeded(1, {0xA5, 8});
  const ShareBundle b = d.issue(17);
  const Bytes f = serialize(b);
  ASSERT_EQ(f.size(), 27u);
  const Bytes head{'E', 'V', 'S', '1', 0x01, 0x08, 0x00, 0x11, 0x02, 0x01, 0x02};
  EXPECT_TRUE(std::equal(head.begin(), head.end(), f.begin()));
  EXPECT_EQ(f[13], 0x02);  // P2 tag
  EXPECT_EQ(f[14], 0x01);
  EXPECT_EQ(f[15], b.p2[0].bits);
  EXPECT_EQ(f[16], 0x03);  // P3 tag
  EXPECT_EQ(f[17], 0x03);
  EXPECT_EQ(f[21], 0x04);
  EXPECT_EQ(f[24], 0x05);
  EXPECT_EQ(parse_share(f), b);
}

TEST(ShareFile, RoundTripProperty) {
  ChaChaRandom rng = ChaChaRandom::from_u64(2024);
  const GenerationLayout layouts[] = {GenerationLayout::paper(), GenerationLayout::toy({4, 4, 8}),
                                      GenerationLayout::toy({1, 300, 70000})};
  for (int trial = 0; trial < 300; ++trial) {
    // Degrees whose canonical extension moduli for generations 1..3 are found quickly.
    constexpr unsigned kEll[] = {1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 14, 16};
    const unsigned ell = kEll[rng.uint_bits(8) % std::size(kEll)];
    const auto& L = layouts[trial % 3];
    auto d = seeded(trial, {rng.uint_bits(ell), ell}, L);
    const BigUint cap = L.is_paper() ? pow2(64) : L.boundary(L.max_generation());
    const BigUint t = 1 + BigUint(rng.uint_bits(64)) % cap;
    const ShareBundle b = d.issue(t);
    const Bytes f = serialize(b);
    ASSERT_EQ(parse_share(f), b);
    ASSERT_EQ(serialize(parse_share(f)), f);
  }
}

TEST(ShareFile, MalformedInputs) {
  auto d = seeded(3, {1, 1}, GenerationLayout::toy({4, 4}));
  const Bytes good = serialize(d.issue(6));
  ASSERT_NO_THROW(parse_share(good));
  auto corrupt = [&](std::size_t i, std::uint8_t v) {
    Bytes b = good;
    b[i] = v;
    return b;
  };
  EXPECT_THROW(parse_share(corrupt(0, 'X')), ParseError);
  EXPECT_THROW(parse_share(corrupt(4, 0x02)), ParseError);  // version
  EXPECT_THROW(parse_share(corrupt(5, 0x00)), ParseError);  // ell
  EXPECT_THROW(parse_share(corrupt(6, 0x07)), ParseError);  // layout tag
  Bytes trailing = good;
  trailing.push_back(0);
  EXPECT_THROW(parse_share(trailing), ParseError);
  EXPECT_THROW(parse_share(Bytes(good.begin(), good.end() - 1)), ParseError);
  EXPECT_THROW(parse_share(Bytes{}), ParseError);

  // Header: magic(4) ver ell tag count sizes(2) t g -> P1 tag at 12.
  ASSERT_EQ(good[12], 0x01);
  EXPECT_THROW(parse_share(corrupt(12, 0x06)), ParseError);  // unknown tag
  EXPECT_THROW(parse_share(corrupt(12, 0x02)), ParseError);  // out of order
  EXPECT_THROW(parse_share(corrupt(13, 0x03)), ParseError);  // wrong declared length
  EXPECT_THROW(parse_share(corrupt(11, 0x01)), ParseError);  // generation disagrees with t
  EXPECT_THROW(parse_share(corrupt(10, 0x09)), ParseError);  // t beyond the toy layout
  EXPECT_THROW(parse_share(corrupt(good.size() - 1, 0x02)), ParseError);  // P5 padding bit
}

TEST(ShareFile, CorruptionNeverEscapesAsUnstructuredError) {
  auto d = seeded(4, {0x5C, 8});
  const ShareBundle a = d.issue(1), b = d.issue(17);
  const Bytes good = serialize(d.issue(18));
  ChaChaRandom rng = ChaChaRandom::from_u64(5);
  int parsed = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    Bytes f = good;
    const int flips = 1 + static_cast<int>(rng.uint_bits(2));
    for (int k = 0; k < flips; ++k) f[rng.uint_bits(16) % f.size()] ^= static_cast<std::uint8_t>(1 + rng.uint_bits(7));
    try {
      const ShareBundle c = parse_share(f);
      ++parsed;
      try {
        reconstruct(a, b, c);
      } catch (const Error&) {
      }
    } catch (const ParseError&) {
    }
  }
  EXPECT_GT(parsed, 0);
}

TEST(ShareFile, NonDefaultWidthHasNoEncoding) {
  auto d = make_dealer({1, 1}, GenerationLayout::toy({2, 2}), std::make_unique<ChaChaRandom>(ChaChaRandom::from_u64(1)),
                       2);
  EXPECT_THROW(serialize(d.issue(1)), ParameterError);
}
