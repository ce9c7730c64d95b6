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

#include <gtest/gtest.h>

#include "evss/errors.hpp"
#include "evss/gf_base.hpp"
#include "oracles.hpp"

using namespace evss;

TEST(GfBase, CanonicalModuliFrozen) {
  EXPECT_EQ(find_irreducible_base(1).coeffs, 0b10u);   // x
  EXPECT_EQ(find_irreducible_base(2).coeffs, 0b111u);  // x^2 + x + 1
  EXPECT_EQ(find_irreducible_base(3).coeffs, 0xBu);
  EXPECT_EQ(find_irreducible_base(4).coeffs, 0x13u);
  EXPECT_EQ(find_irreducible_base(8).coeffs, 0x11Bu);  // x^8 + x^4 + x^3 + x + 1
  EXPECT_EQ(find_irreducible_base(16).coeffs, 0x1002Bu);
}

TEST(GfBase, CanonicalModuliMatchTrialDivision) {
  for (unsigned ell = 1; ell <= 16; ++ell) {
    EXPECT_EQ(find_irreducible_base(ell).coeffs, oracle::smallest_irreducible(ell)) << "ell=" << ell;
  }
}

TEST(GfBase, BenOrAgreesWithTrialDivision) {
  for (std::uint64_t p = 2; p < (1u << 13); ++p) {
    ASSERT_EQ(f2poly::is_irreducible(p), oracle::irreducible_by_trial(p)) << p;
  }
}

TEST(GfBase, LargeDegreesAreFoundAndIrreducible) {
  for (unsigned ell : {31u, 32u, 33u, 48u, 63u}) {
    const auto g = find_irreducible_base(ell);
    EXPECT_EQ(g.ell, ell);
    EXPECT_EQ(f2poly::degree(g.coeffs), ell);
    EXPECT_TRUE(f2poly::is_irreducible(g.coeffs));
  }
  EXPECT_THROW(find_irreducible_base(0), ParameterError);
  EXPECT_THROW(find_irreducible_base(64), ParameterError);
}

TEST(GfBase, AdditionExamples) {
  const BaseField f = BaseField::canonical(2);
  const BaseElem x = f.elem(0b10), x1 = f.elem(0b11);
  EXPECT_EQ(base_add(x, f.zero()), x);
  EXPECT_EQ(base_add(x, x), f.zero());
  EXPECT_EQ(base_add(x, x1), f.one());
  EXPECT_THROW(base_add(x, BaseElem{1, 3}), ParameterError);
}

TEST(GfBase, MultiplicationAndInverseExamples) {
  const BaseField f = BaseField::canonical(2);
  const BaseElem x = f.elem(0b10), x1 = f.elem(0b11);
  EXPECT_EQ(f.mul(x, x), x1);
  EXPECT_EQ(f.mul(x, x1), f.one());
  EXPECT_EQ(f.inv(x), x1);
  EXPECT_EQ(f.inv(f.one()), f.one());
  EXPECT_THROW(f.inv(f.zero()), DivisionByZero);
  EXPECT_THROW(f.elem(4), ParameterError);
}

TEST(GfBase, ExhaustiveAgainstOracleSmallFields) {
  for (unsigned ell = 1; ell <= 8; ++ell) {
    const BaseField f = BaseField::canonical(ell);
    const std::uint64_t mod = f.modulus().coeffs;
    const std::uint64_t n = std::uint64_t{1} << ell;
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t b = 0; b < n; ++b) {
        ASSERT_EQ(f.mul(f.elem(a), f.elem(b)).bits, oracle::mul(a, b, mod)) << ell << ' ' << a << ' ' << b;
      }
      if (a != 0) ASSERT_EQ(f.inv(f.elem(a)).bits, *oracle::inverse_by_search(a, mod));
    }
  }
}

TEST(GfBase, FieldAxiomsExhaustiveEll4) {
  const BaseField f = BaseField::canonical(4);
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      const BaseElem A = f.elem(a), B = f.elem(b);
      ASSERT_EQ(f.mul(A, B), f.mul(B, A));
      for (std::uint64_t c = 0; c < 16; ++c) {
        const BaseElem C = f.elem(c);
        ASSERT_EQ(f.mul(f.mul(A, B), C), f.mul(A, f.mul(B, C)));
        ASSERT_EQ(f.mul(A, f.add(B, C)), f.add(f.mul(A, B), f.mul(A, C)));
      }
    }
  }
}

TEST(GfBase, RandomisedWideFieldsAgainstOracle) {
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  auto next = [&] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (unsigned ell : {9u, 12u, 13u, 16u, 17u, 31u, 32u, 47u, 63u}) {
    const BaseField f = BaseField::canonical(ell);
    for (int i = 0; i < 300; ++i) {
      const std::uint64_t a = next() & f.order_mask(), b = next() & f.order_mask();
      ASSERT_EQ(f.mul(f.elem(a), f.elem(b)).bits, oracle::mul(a, b, f.modulus().coeffs));
      if (a != 0) ASSERT_EQ(f.mul(f.elem(a), f.inv(f.elem(a))), f.one());
    }
  }
}
