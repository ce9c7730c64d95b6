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

#include "evss/gf_base.hpp"

// Inter-generation scheme: one share per generation, any three generations
// recover the secret, any two learn nothing.

namespace evss {

struct InfShare {
  unsigned generation = 0;
  BaseElem value;

  friend bool operator==(const InfShare&, const InfShare&) = default;
};

class InfScheme {
 public:
  virtual ~InfScheme() = default;
  virtual InfShare share(unsigned generation) const = 0;
  /// Recovers the ell-bit secret from shares of three distinct generations.
  virtual BaseElem reconstruct(const std::array<InfShare, 3>& shares) const = 0;
  /// Bits stored per share.
  virtual unsigned share_bits() const = 0;
};

/// Share width used when none is requested: max(ell, 16).
unsigned default_inf_width(unsigned ell);

/// Degree-2 polynomial sharing over GF(2^width): the secret (zero-extended)
/// is the constant term, generation i evaluates at the element with bits i.
/// Serves generations 1 .. 2^width - 1.
class PolyInfScheme final : public InfScheme {
 public:
  PolyInfScheme(const BaseElem& secret, unsigned width, const BaseElem& c1, const BaseElem& c2);

  InfShare share(unsigned generation) const override;
  BaseElem reconstruct(const std::array<InfShare, 3>& shares) const override;
  unsigned share_bits() const override { return field_.ell(); }
  const BaseField& field() const { return field_; }

  /// Reconstruction that needs no dealer state.
  static BaseElem combine(const std::array<InfShare, 3>& shares, unsigned secret_bits);

 private:
  BaseField field_;
  unsigned secret_bits_;
  BaseElem c0_;
  BaseElem c1_;
  BaseElem c2_;
};

}  // namespace evss
