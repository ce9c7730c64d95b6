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

#include "evss/inf_scheme.hpp"

#include <algorithm>
#include <string>

#include "evss/errors.hpp"

namespace evss {
namespace {

std::uint64_t point_of(unsigned generation, const BaseField& field) {
  if (generation == 0 || generation > field.order_mask()) {
    throw CapacityError("generation " + std::to_string(generation) + " exceeds the inter-generation scheme (width " +
                        std::to_string(field.ell()) + ")");
  }
  return generation;
}

}  // namespace

unsigned default_inf_width(unsigned ell) { return std::max(ell, 16u); }

PolyInfScheme::PolyInfScheme(const BaseElem& secret, unsigned width, const BaseElem& c1, const BaseElem& c2)
    : field_(BaseField::canonical(width)), secret_bits_(secret.ell), c0_{secret.bits, width}, c1_(c1), c2_(c2) {
  if (secret.ell > width) throw ParameterError("inter-generation width is narrower than the secret");
  field_.check(c1_);
  field_.check(c2_);
}

InfShare PolyInfScheme::share(unsigned generation) const {
  const std::uint64_t x = point_of(generation, field_);
  const std::uint64_t v = c0_.bits ^ field_.mul_raw(x, c1_.bits ^ field_.mul_raw(x, c2_.bits));
  return {generation, field_.elem(v)};
}

BaseElem PolyInfScheme::reconstruct(const std::array<InfShare, 3>& shares) const {
  return combine(shares, secret_bits_);
}

BaseElem PolyInfScheme::combine(const std::array<InfShare, 3>& shares, unsigned secret_bits) {
  const unsigned width = shares[0].value.ell;
  for (const auto& s : shares) {
    if (s.value.ell != width) throw ParameterError("inter-generation shares of different widths");
  }
  if (secret_bits > width) throw ParameterError("secret wider than the inter-generation shares");
  const BaseField field = BaseField::canonical(width);
  std::uint64_t xs[3];
  for (int i = 0; i < 3; ++i) {
    field.check(shares[i].value);
    xs[i] = point_of(shares[i].generation, field);
  }
  if (xs[0] == xs[1] || xs[0] == xs[2] || xs[1] == xs[2]) {
    throw ParameterError("inter-generation shares must come from three distinct generations");
  }
  // Lagrange at 0: sum v_i * x_j x_k / ((x_i - x_j)(x_i - x_k))
  std::uint64_t acc = 0;
  for (int i = 0; i < 3; ++i) {
    const std::uint64_t xj = xs[(i + 1) % 3];
    const std::uint64_t xk = xs[(i + 2) % 3];
    const std::uint64_t den = field.mul_raw(xs[i] ^ xj, xs[i] ^ xk);
    acc ^= field.mul_raw(shares[i].value.bits, field.mul_raw(field.mul_raw(xj, xk), field.inv_raw(den)));
  }
  if (secret_bits < 64 && (acc >> secret_bits) != 0) {
    throw VerificationError("inter-generation shares are inconsistent (secret overflows its width)");
  }
  return {acc, secret_bits};
}

}  // namespace evss
