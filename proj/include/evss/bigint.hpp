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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace evss {

/// Arbitrary-precision non-negative integer for participant indices and
/// generation boundaries (generation 3 already starts past 2^64).
using BigUint = boost::multiprecision::cpp_int;

/// Number of significant bits; 0 for 0.
inline unsigned bit_length(const BigUint& v) {
  return v == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(v)) + 1u;
}

/// ceil(log2 v) for v >= 1.
inline unsigned ceil_lg(const BigUint& v) {
  return v <= 1 ? 0u : bit_length(v - 1);
}

inline BigUint pow2(unsigned k) {
  BigUint r = 1;
  r <<= k;
  return r;
}

inline std::string to_string(const BigUint& v) { return v.str(); }

}  // namespace evss
