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
#include <memory>
#include <vector>

#include "evss/bigint.hpp"
#include "evss/distribution.hpp"
#include "evss/gf_ext.hpp"
#include "evss/random.hpp"

// Conventional (3, 2^(ell*m-1) + 1)-threshold scheme over GF(2^(ell*m)).
//
// The dealer picks a0, a1 uniformly in the extension field and sets
// a2 = proj_const(a1 + s), so that s = a2 + proj_const(a1). Participant i
// receives F(beta_{2i}) with F(w) = a0 + a1*w + a2*w^2; a2 itself is one more
// share. Only even-indexed points are used: an odd/even pair of points leaks
// the low bit of s (see odd_point_leak_report).

namespace evss {

enum class ParamMode { production, audit };

struct StaticParams {
  unsigned ell = 0;
  unsigned m = 0;
  std::shared_ptr<const ExtField> field;

  const ExtField& ext() const { return *field; }
  const BaseField& base() const { return field->base(); }
  /// Number of curve shares, 2^(ell*m - 1).
  BigUint curve_capacity() const { return pow2(ell * m - 1); }
};

/// Canonical moduli for (ell, m). Production parameters require m >= 2; m = 1
/// is only accepted in audit mode.
StaticParams make_static_params(unsigned ell, unsigned m, ParamMode mode = ParamMode::production);

struct StaticDealerState {
  ExtElem a0;
  ExtElem a1;
  BaseElem a2;
  BaseElem secret;
};

struct CurveShare {
  BigUint curve_index;  // participant i holds F(beta_{2i})
  ExtElem value;

  friend bool operator==(const CurveShare&, const CurveShare&) = default;
};

StaticDealerState static_split(const BaseElem& secret, const StaticParams& params, RandomSource& rng);
/// Dealer with the random coefficients supplied by the caller.
StaticDealerState static_split(const BaseElem& secret, const StaticParams& params, ExtElem a0, ExtElem a1);

/// beta_{2i}, the evaluation point of curve share i.
ExtElem curve_point(const StaticParams& params, const BigUint& curve_index);
/// F(w) = a0 + a1*w + a2*w^2.
ExtElem evaluate(const StaticDealerState& state, const StaticParams& params, const ExtElem& w);
CurveShare share_at(const StaticDealerState& state, const StaticParams& params, const BigUint& curve_index);
/// The extra share a2 (the forward share of a generation).
BaseElem static_fshare(const StaticDealerState& state);

/// Coefficients of the quadratic through three points with distinct abscissas.
struct Quadratic {
  ExtElem a0;
  ExtElem a1;
  ExtElem a2;
};
Quadratic interpolate_quadratic(const ExtElem (&xs)[3], const ExtElem (&zs)[3], const ExtField& field);

/// Secret from three curve shares via the expanded Lagrange closed form for
/// a1 + a2. Used as a cross-check by reconstruct_three.
BaseElem closed_form_three(const CurveShare& s1, const CurveShare& s2, const CurveShare& s3,
                           const StaticParams& params);

/// Secret from three curve shares. Recovers (a0, a1, a2) by interpolation,
/// checks that a2 lies in the base field and that the closed form agrees;
/// throws VerificationError otherwise.
BaseElem reconstruct_three(const CurveShare& s1, const CurveShare& s2, const CurveShare& s3,
                           const StaticParams& params);

/// Secret from two curve shares plus a2: a1 from the two-point line through
/// Z - a2*beta^2, then s = a2 + proj_const(a1).
BaseElem reconstruct_two_plus_f(const CurveShare& s1, const CurveShare& s2, const BaseElem& a2,
                                const StaticParams& params);

/// One share pair of the unsound variant that hands out F(beta_j) for every j.
struct LeakRow {
  std::uint64_t point_i = 0;
  std::uint64_t point_j = 0;
  bool mixed_parity = false;  // i + j odd
  std::uint64_t s0 = 0;
  std::uint64_t s1 = 0;
  Rational distance;
};

struct LeakReport {
  unsigned ell = 0;
  unsigned m = 0;
  std::vector<LeakRow> rows;
  Rational max_mixed_distance;
  Rational max_even_distance;
  /// Transcripts (secret, a0, a1, mixed pair) examined by the low-bit rule
  /// bit0(proj_const((Z_j - Z_i)/(beta_j - beta_i))) == bit0(s).
  std::uint64_t rule_transcripts = 0;
  std::uint64_t rule_agreements = 0;
  /// For ell = 1 the rule is exact: 1 + beta_i + beta_j = 0 mod y for every
  /// mixed pair.
  bool rule_exact() const { return ell == 1; }
};

/// Exhaustively tabulates share-pair distributions of the all-points variant.
/// Refuses ell*m > 10. `max_mixed_pairs` bounds the number of mixed-parity
/// pairs examined (0 = all); pairs are visited in lexicographic order.
LeakReport odd_point_leak_report(const StaticParams& params, std::size_t max_mixed_pairs = 0);

}  // namespace evss
