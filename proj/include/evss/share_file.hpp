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
#include "evss/evolving.hpp"

// Share file, version 1:
//   "EVS1" | 0x01 | ell | layout | varint t | varint g | P1 .. P5
// layout is 0x00 (paper) or 0x01, varint count, varint sizes. Each piece is
// tag (0x01..0x05), varint byte length, payload. Bit payloads are
// little-endian and padded with zero high bits; P2 and P4 entries are padded
// individually. P3 holds only the curve value, its index being h(t) - 1.
// Varints are unsigned LEB128 in minimal form.

namespace evss {

namespace varint {
void put(std::vector<std::uint8_t>& out, const BigUint& value);
/// Reads at `pos` and advances it. Throws ParseError on truncated or
/// non-minimal encodings.
BigUint get(std::span<const std::uint8_t> in, std::size_t& pos);
}  // namespace varint

std::vector<std::uint8_t> serialize(const ShareBundle& bundle);
/// Inverse of serialize; every malformed input raises ParseError.
ShareBundle parse_share(std::span<const std::uint8_t> bytes);

}  // namespace evss
