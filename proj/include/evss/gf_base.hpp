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

namespace evss {

/// Largest supported base-field degree; the modulus x^ell + ... must fit in 64 bits.
inline constexpr unsigned kMaxBaseDegree = 63;

/// Monic polynomial of degree `ell` over F2; bit k of `coeffs` is the
/// coefficient of x^k, so bit `ell` is always set.
struct BasePolyModulus {
  unsigned ell = 0;
  std::uint64_t coeffs = 0;

  friend bool operator==(const BasePolyModulus&, const BasePolyModulus&) = default;
};

/// Element of GF(2^ell): bit k is the coefficient of x^k.
struct BaseElem {
  std::uint64_t bits = 0;
  unsigned ell = 0;

  friend bool operator==(const BaseElem&, const BaseElem&) = default;
};

/// Polynomial helpers over F2 on packed words (bit k = coefficient of x^k).
namespace f2poly {
unsigned degree(std::uint64_t p);  // degree of 0 is reported as 0
std::uint64_t mod(unsigned __int128 a, std::uint64_t m);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
/// Ben-Or test: gcd(x^(2^k) - x, p) = 1 for every k <= deg(p)/2.
bool is_irreducible(std::uint64_t p);
}  // namespace f2poly

/// Addition in characteristic 2 (coefficient-wise XOR). Only the degree has
/// to agree, so it needs no field object.
BaseElem base_add(const BaseElem& a, const BaseElem& b);

/// GF(2^ell) = F2[x]/g(x) for a fixed monic irreducible g.
class BaseField {
 public:
  explicit BaseField(BasePolyModulus modulus);

  /// Field with the canonical modulus from find_irreducible_base.
  static BaseField canonical(unsigned ell);

  unsigned ell() const { return modulus_.ell; }
  const BasePolyModulus& modulus() const { return modulus_; }
  std::uint64_t order_mask() const { return mask_; }

  BaseElem zero() const { return {0, ell()}; }
  BaseElem one() const { return {1, ell()}; }
  /// Element from its coefficient bits; bits above ell are rejected.
  BaseElem elem(std::uint64_t bits) const;

  BaseElem add(const BaseElem& a, const BaseElem& b) const;
  BaseElem mul(const BaseElem& a, const BaseElem& b) const;
  BaseElem square(const BaseElem& a) const { return mul(a, a); }
  /// Extended Euclid; throws DivisionByZero for 0.
  BaseElem inv(const BaseElem& a) const;
  BaseElem div(const BaseElem& a, const BaseElem& b) const { return mul(a, inv(b)); }

  // Unchecked word-level kernels for hot loops; inputs must already be reduced.
  std::uint64_t mul_raw(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv_raw(std::uint64_t a) const;

  void check(const BaseElem& a) const;

 private:
  BasePolyModulus modulus_;
  std::uint64_t mask_;
  struct Tables;
  static std::shared_ptr<const Tables> make_tables(std::uint64_t modulus, unsigned ell);
  // Product table (ell <= 8) or log/exp tables (ell <= 16), shared between copies.
  std::shared_ptr<const Tables> tables_;
};

/// Monic irreducible of degree ell whose coefficient string, read as an
/// unsigned integer, is smallest. Deterministic.
BasePolyModulus find_irreducible_base(unsigned ell);

std::string to_string(const BasePolyModulus& g);

}  // namespace evss
