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

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace evss {

/// Exact non-negative rational, always stored in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den);
  bool is_zero() const { return num == 0; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
};

/// Histogram of observed views for one secret, keyed by packed view bits.
/// Views up to `kDenseBits` wide go into a flat array; wider views fall back
/// to a hash map.
class Tally {
 public:
  static constexpr unsigned kDenseBits = 22;

  explicit Tally(unsigned key_bits);

  void add(std::uint64_t key);
  void add(const std::string& key);
  std::uint64_t total() const { return total_; }
  unsigned key_bits() const { return key_bits_; }

  /// Probability that the view equals `key` (count / total).
  Rational probability(std::uint64_t key) const;

  /// Statistical distance 1/2 * sum |P(v) - Q(v)|, exact.
  friend Rational statistical_distance(const Tally& p, const Tally& q);

 private:
  std::uint64_t count_of(std::uint64_t key) const;

  unsigned key_bits_;
  bool dense_;
  std::uint64_t total_ = 0;
  std::vector<std::uint32_t> dense_counts_;
  std::unordered_map<std::string, std::uint64_t> sparse_counts_;
};

}  // namespace evss
