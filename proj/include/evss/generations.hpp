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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evss/bigint.hpp"

// Participants are grouped into generations G^1, G^2, ... with boundaries
// n_0 = 0 < n_1 < n_2 < ...; participant t belongs to the first g with
// t <= n_g. The paper layout uses n_g = 2^(4^g). Toy layouts list a finite
// sequence of generation sizes for exhaustive audits.

namespace evss {

/// Highest generation the paper layout serves. n_8 = 2^65536 is far beyond
/// any realizable participant count.
inline constexpr unsigned kMaxPaperGeneration = 8;

struct ParticipantLocus {
  BigUint t;
  unsigned generation = 0;
  BigUint index_in_gen;  // h = t - n_{g-1}, 1-based

  friend bool operator==(const ParticipantLocus&, const ParticipantLocus&) = default;
};

class GenerationLayout {
 public:
  static GenerationLayout paper();
  /// Finite layout with the given positive generation sizes.
  static GenerationLayout toy(std::vector<BigUint> sizes);
  /// "paper", or a comma-separated size list optionally prefixed by "toy:".
  static GenerationLayout parse(std::string_view text);

  bool is_paper() const { return sizes_.empty(); }
  const std::vector<BigUint>& toy_sizes() const { return sizes_; }
  /// Last generation that can be served.
  unsigned max_generation() const;
  /// n_g; n_0 = 0.
  BigUint boundary(unsigned g) const;
  /// S(G^g) = n_g - n_{g-1}.
  BigUint gen_size(unsigned g) const;
  /// Smallest g with t <= n_g, by exact comparison. Throws CapacityError past
  /// the last generation.
  unsigned gen_of(const BigUint& t) const;
  ParticipantLocus index_in_gen(const BigUint& t) const;
  std::string describe() const;

  friend bool operator==(const GenerationLayout&, const GenerationLayout&) = default;

 private:
  std::vector<BigUint> sizes_;  // empty for the paper layout
};

/// Inner extension degree of generation g: smallest m >= 2 with
/// ell*m >= ceil(lg S(G^g)) + 1, so that 2^(ell*m - 1) >= S(G^g).
unsigned inner_degree(unsigned g, unsigned ell, const GenerationLayout& layout);

}  // namespace evss
