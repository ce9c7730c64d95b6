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

#include "evss/generations.hpp"

#include "evss/errors.hpp"

namespace evss {

GenerationLayout GenerationLayout::paper() { return GenerationLayout{}; }

GenerationLayout GenerationLayout::toy(std::vector<BigUint> sizes) {
  if (sizes.empty()) throw ParameterError("toy layout needs at least one generation");
  for (const auto& s : sizes) {
    if (s <= 0) throw ParameterError("toy generation sizes must be positive");
  }
  GenerationLayout layout;
  layout.sizes_ = std::move(sizes);
  return layout;
}

GenerationLayout GenerationLayout::parse(std::string_view text) {
  if (text == "paper") return paper();
  if (text.starts_with("toy:")) text.remove_prefix(4);
  std::vector<BigUint> sizes;
  while (true) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParameterError("layout must be 'paper' or a list of sizes like 4,4,8");
    }
    sizes.emplace_back(std::string(item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return toy(std::move(sizes));
}

unsigned GenerationLayout::max_generation() const {
  return is_paper() ? kMaxPaperGeneration : static_cast<unsigned>(sizes_.size());
}

BigUint GenerationLayout::boundary(unsigned g) const {
  if (g > max_generation()) throw CapacityError("generation " + std::to_string(g) + " is beyond the layout");
  if (g == 0) return 0;
  if (is_paper()) return pow2(1u << (2 * g));
  BigUint n = 0;
  for (unsigned i = 0; i < g; ++i) n += sizes_[i];
  return n;
}

BigUint GenerationLayout::gen_size(unsigned g) const {
  if (g == 0) throw ParameterError("generations are numbered from 1");
  return boundary(g) - boundary(g - 1);
}

unsigned GenerationLayout::gen_of(const BigUint& t) const {
  if (t < 1) throw ParameterError("participant indices start at 1");
  if (is_paper()) {
    // t <= 2^(4^g)  <=>  bit_length(t - 1) <= 4^g
    const unsigned len = bit_length(t - 1);
    for (unsigned g = 1; g <= kMaxPaperGeneration; ++g) {
      if (len <= (1u << (2 * g))) return g;
    }
  } else {
    BigUint n = 0;
    for (unsigned g = 1; g <= sizes_.size(); ++g) {
      n += sizes_[g - 1];
      if (t <= n) return g;
    }
  }
  throw CapacityError("participant " + to_string(t) + " exceeds the layout " + describe());
}

ParticipantLocus GenerationLayout::index_in_gen(const BigUint& t) const {
  const unsigned g = gen_of(t);
  return {t, g, t - boundary(g - 1)};
}

std::string GenerationLayout::describe() const {
  if (is_paper()) return "paper";
  std::string out = "toy:";
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ',';
    out += to_string(sizes_[i]);
  }
  return out;
}

unsigned inner_degree(unsigned g, unsigned ell, const GenerationLayout& layout) {
  if (ell < 1) throw ParameterError("ell must be positive");
  const unsigned need = ceil_lg(layout.gen_size(g)) + 1;
  const unsigned m = (need + ell - 1) / ell;
  return m < 2 ? 2 : m;
}

}  // namespace evss
