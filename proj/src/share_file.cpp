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

#include "evss/share_file.hpp"

#include <array>
#include <string>

#include "evss/errors.hpp"

namespace evss {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic{'E', 'V', 'S', '1'};
constexpr std::uint8_t kVersion = 0x01;
constexpr std::uint8_t kLayoutPaper = 0x00;
constexpr std::uint8_t kLayoutToy = 0x01;
constexpr std::size_t kMaxVarintBytes = 10000;
constexpr std::size_t kMaxToyGenerations = 4096;

std::size_t bytes_for(std::size_t nbits) { return (nbits + 7) / 8; }

void put_bits(std::vector<std::uint8_t>& out, const BitString& bits) {
  auto b = bits.bytes();
  out.insert(out.end(), b.begin(), b.end());
}

void put_piece(std::vector<std::uint8_t>& out, std::uint8_t tag, const std::vector<std::uint8_t>& payload) {
  out.push_back(tag);
  varint::put(out, payload.size());
  out.insert(out.end(), payload.begin(), payload.end());
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

  std::uint8_t byte(const char* what) {
    if (pos_ >= in_.size()) throw ParseError(std::string("truncated share file (") + what + ")");
    return in_[pos_++];
  }
  std::span<const std::uint8_t> take(std::size_t n, const char* what) {
    if (n > in_.size() - pos_) throw ParseError(std::string("truncated share file (") + what + ")");
    auto s = in_.subspan(pos_, n);
    pos_ += n;
    return s;
  }
  BigUint number() { return varint::get(in_, pos_); }
  unsigned small(const char* what, unsigned limit) {
    BigUint v = number();
    if (v > limit) throw ParseError(std::string(what) + " out of range");
    return static_cast<unsigned>(v);
  }
  bool done() const { return pos_ == in_.size(); }

  // Next piece, which must carry `tag` and exactly `length` payload bytes.
  std::span<const std::uint8_t> piece(std::uint8_t tag, std::size_t length) {
    const std::uint8_t got = byte("piece tag");
    if (got < 0x01 || got > 0x05) throw ParseError("unknown piece tag " + std::to_string(got));
    if (got != tag) throw ParseError("piece P" + std::to_string(got) + " out of order");
    const BigUint declared = number();
    if (declared != length) {
      throw ParseError("piece P" + std::to_string(tag) + " declares " + to_string(declared) + " bytes, expected " +
                       std::to_string(length));
    }
    return take(length, "piece payload");
  }

 private:
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

BitString bits_from(std::span<const std::uint8_t> bytes, std::size_t nbits) {
  try {
    return BitString::from_bytes(bytes, nbits);
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

namespace varint {

void put(std::vector<std::uint8_t>& out, const BigUint& value) {
  if (value < 0) throw ParameterError("varints are unsigned");
  BigUint v = value;
  do {
    std::uint8_t b = static_cast<std::uint8_t>(static_cast<unsigned>(v & 0x7f));
    v >>= 7;
    if (v != 0) b |= 0x80;
    out.push_back(b);
  } while (v != 0);
}

BigUint get(std::span<const std::uint8_t> in, std::size_t& pos) {
  BigUint value = 0;
  unsigned shift = 0;
  for (std::size_t n = 0;; ++n) {
    if (n == kMaxVarintBytes) throw ParseError("varint too long");
    if (pos >= in.size()) throw ParseError("truncated varint");
    const std::uint8_t b = in[pos++];
    value |= BigUint(b & 0x7f) << shift;
    shift += 7;
    if ((b & 0x80) == 0) {
      if (b == 0 && n > 0) throw ParseError("non-minimal varint");
      return value;
    }
  }
}

}  // namespace varint

std::vector<std::uint8_t> serialize(const ShareBundle& b) {
  const unsigned ell = b.ell;
  if (b.p1.value.ell != default_inf_width(ell)) {
    throw ParameterError("only the default inter-generation width has a file encoding");
  }
  const unsigned g = b.generation();
  if (b.p2.size() + 1 != g || b.p4.size() + 1 != g) throw ParameterError("bundle piece counts do not match g");

  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  out.push_back(kVersion);
  out.push_back(static_cast<std::uint8_t>(ell));
  if (b.layout.is_paper()) {
    out.push_back(kLayoutPaper);
  } else {
    out.push_back(kLayoutToy);
    varint::put(out, b.layout.toy_sizes().size());
    for (const auto& s : b.layout.toy_sizes()) varint::put(out, s);
  }
  varint::put(out, b.locus.t);
  varint::put(out, g);

  std::vector<std::uint8_t> payload;
  put_bits(payload, BitString::from_uint(b.p1.value.bits, b.p1.value.ell));
  put_piece(out, 0x01, payload);

  payload.clear();
  for (const auto& e : b.p2) put_bits(payload, BitString::from_uint(e.bits, e.ell));
  put_piece(out, 0x02, payload);

  payload.clear();
  BitWriter w;
  for (auto c : b.p3.value.coeffs) w.put(c, ell);
  payload = w.bytes();
  put_piece(out, 0x03, payload);

  payload.clear();
  for (const auto& e : b.p4) put_bits(payload, e);
  put_piece(out, 0x04, payload);

  payload.clear();
  put_bits(payload, b.p5);
  put_piece(out, 0x05, payload);
  return out;
}

ShareBundle parse_share(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  for (auto m : kMagic) {
    if (r.byte("magic") != m) throw ParseError("not a share file (bad magic)");
  }
  if (r.byte("version") != kVersion) throw ParseError("unsupported share file version");

  ShareBundle b;
  const unsigned ell = r.byte("ell");
  if (ell < 1 || ell > kMaxBaseDegree) throw ParseError("ell out of range");
  b.ell = ell;

  const std::uint8_t layout_tag = r.byte("layout");
  if (layout_tag == kLayoutPaper) {
    b.layout = GenerationLayout::paper();
  } else if (layout_tag == kLayoutToy) {
    const unsigned count = r.small("toy generation count", kMaxToyGenerations);
    if (count == 0) throw ParseError("toy layout without generations");
    std::vector<BigUint> sizes;
    for (unsigned i = 0; i < count; ++i) {
      sizes.push_back(r.number());
      if (sizes.back() == 0) throw ParseError("toy generation of size 0");
    }
    b.layout = GenerationLayout::toy(std::move(sizes));
  } else {
    throw ParseError("unknown layout tag");
  }

  const BigUint t = r.number();
  if (t == 0) throw ParseError("participant index 0");
  const unsigned g = r.small("generation", kMaxToyGenerations);
  try {
    b.locus = b.layout.index_in_gen(t);
  } catch (const CapacityError& e) {
    throw ParseError(e.what());
  }
  if (b.locus.generation != g) throw ParseError("generation field disagrees with t");

  const unsigned width = default_inf_width(ell);
  const std::size_t entry = bytes_for(ell);
  const unsigned m = inner_degree(g, ell, b.layout);

  b.p1 = {g, {bits_from(r.piece(0x01, bytes_for(width)), width).read_uint(0, width), width}};

  auto p2 = r.piece(0x02, std::size_t{g - 1} * entry);
  for (unsigned j = 0; j + 1 < g; ++j) {
    b.p2.push_back({bits_from(p2.subspan(j * entry, entry), ell).read_uint(0, ell), ell});
  }

  const BitString p3 = bits_from(r.piece(0x03, bytes_for(std::size_t{ell} * m)), std::size_t{ell} * m);
  b.p3.curve_index = b.locus.index_in_gen - 1;
  b.p3.value.ell = ell;
  for (unsigned k = 0; k < m; ++k) b.p3.value.coeffs.push_back(p3.read_uint(std::size_t{k} * ell, ell));

  auto p4 = r.piece(0x04, std::size_t{g - 1} * entry);
  for (unsigned j = 0; j + 1 < g; ++j) b.p4.push_back(bits_from(p4.subspan(j * entry, entry), ell));

  b.p5 = bits_from(r.piece(0x05, entry), ell);
  if (!r.done()) throw ParseError("trailing bytes after P5");
  return b;
}

}  // namespace evss
