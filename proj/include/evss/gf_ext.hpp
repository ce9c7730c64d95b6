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
#include <memory>
#include <string>
#include <vector>

#include "evss/bigint.hpp"
#include "evss/bits.hpp"
#include "evss/gf_base.hpp"

namespace evss {

/// Monic polynomial of degree m over GF(2^ell); coeffs[k] is the coefficient
/// of y^k and coeffs[m] == 1.
struct ExtPolyModulus {
  unsigned m = 0;
  std::vector<BaseElem> coeffs;

  friend bool operator==(const ExtPolyModulus&, const ExtPolyModulus&) = default;
};

/// Element of GF(2^(ell*m)) as m base-field coordinates; coeffs[k] holds the
/// bits of the coefficient of y^k.
struct ExtElem {
  unsigned ell = 0;
  std::vector<std::uint64_t> coeffs;

  unsigned m() const { return static_cast<unsigned>(coeffs.size()); }
  BaseElem coeff(unsigned k) const { return {coeffs[k], ell}; }
  bool is_zero() const;

  friend bool operator==(const ExtElem&, const ExtElem&) = default;
};

/// Constant coefficient (y^0 coordinate) of an extension element.
BaseElem proj_const(const ExtElem& beta);

/// GF(2^(ell*m)) = GF(2^ell)[y]/g1(y).
class ExtField {
 public:
  ExtField(BaseField base, ExtPolyModulus modulus);

  /// Field over the canonical base modulus with the canonical g1. Cached and
  /// shared; safe to call from several threads.
  static std::shared_ptr<const ExtField> canonical(unsigned ell, unsigned m);

  const BaseField& base() const { return base_; }
  const ExtPolyModulus& modulus() const { return modulus_; }
  unsigned ell() const { return base_.ell(); }
  unsigned m() const { return modulus_.m; }
  unsigned total_bits() const { return ell() * m(); }

  ExtElem zero() const { return {ell(), std::vector<std::uint64_t>(m(), 0)}; }
  ExtElem one() const;

  ExtElem add(const ExtElem& a, const ExtElem& b) const;
  ExtElem mul(const ExtElem& a, const ExtElem& b) const;
  ExtElem square(const ExtElem& a) const { return mul(a, a); }
  /// Extended Euclid over GF(2^ell)[y]; throws DivisionByZero for 0.
  ExtElem inv(const ExtElem& a) const;
  ExtElem div(const ExtElem& a, const ExtElem& b) const { return mul(a, inv(b)); }
  /// Base scalar times extension element (coordinate-wise).
  ExtElem scale(const BaseElem& c, const ExtElem& a) const;

  /// (alpha, 0, ..., 0). Ring homomorphism from the base field.
  ExtElem embed(const BaseElem& alpha) const;
  /// True when all coordinates above y^0 vanish.
  bool in_base_subfield(const ExtElem& a) const;

  /// beta_j: coefficient of y^k is bits [k*ell, (k+1)*ell) of j.
  ExtElem index_to_point(const BigUint& j) const;
  BigUint point_to_index(const ExtElem& a) const;

  /// Packed little-endian coefficient bit string of length ell*m (the same
  /// bit order as index_to_point).
  BitString to_bits(const ExtElem& a) const;
  ExtElem from_bits(const BitString& bits) const;

  void check(const ExtElem& a) const;

 private:
  BaseField base_;
  ExtPolyModulus modulus_;
};

/// Smallest monic irreducible of degree m over the given base field, ordered
/// lexicographically by coefficients with y^(m-1) most significant.
ExtPolyModulus find_irreducible_ext(unsigned m, const BasePolyModulus& base);

/// Ben-Or irreducibility test for a monic polynomial over GF(2^ell).
bool is_irreducible_ext(const ExtPolyModulus& g, const BaseField& base);

std::string to_string(const ExtPolyModulus& g);

}  // namespace evss
