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
#include <utility>
#include <vector>

#include "evss/distribution.hpp"
#include "evss/generations.hpp"
#include "evss/static3.hpp"

// Exhaustive secrecy audits. For every unqualified set of shares and every
// pair of secrets, the joint distribution of the set's view over all dealer
// randomness is tabulated exactly and the two distributions are compared.

namespace evss {

struct AuditRow {
  std::string set;
  std::uint64_t s0 = 0;
  std::uint64_t s1 = 0;
  Rational distance;
};

struct AuditReport {
  std::string scheme;
  std::string params;
  std::vector<AuditRow> rows;
  /// Dealer instances enumerated (secrets times randomness assignments).
  std::uint64_t enumerated = 0;
  /// Correctness side-checks run alongside, where an audit has them.
  std::uint64_t checks = 0;
  std::uint64_t check_failures = 0;

  Rational max_distance() const;
  /// True iff every distance is exactly 0 and no side-check failed.
  bool pass() const;
};

/// Single shares and pairs drawn from the even-point curve shares and a2.
/// With `admit_odd`, the all-points leak report is appended. Needs
/// 2*ell*m <= 16.
AuditReport audit_static(const StaticParams& params, bool admit_odd = false);

enum class Variant { revised, flawed };

struct EvolvingAuditOptions {
  Variant variant = Variant::revised;
  /// Width of the inter-generation scheme in the audited dealers.
  unsigned inf_width = 2;
  /// Enumerate only the coins the audited bundles read; otherwise every coin
  /// of every generation up to the highest audited one.
  bool marginalize = true;
  /// Participant pairs to audit; empty means every unordered pair.
  std::vector<std::pair<BigUint, BigUint>> pairs;
  /// Also audit every single participant (all of them when `pairs` is empty,
  /// otherwise those named in `pairs`).
  bool singles = true;
  /// Largest enumerable randomness space, in bits.
  unsigned max_random_bits = 24;
};

/// Randomness bits a set of generations depends on (see EvolvingAuditOptions).
unsigned evolving_random_bits(const std::vector<unsigned>& generations, const GenerationLayout& layout, unsigned ell,
                              const EvolvingAuditOptions& options);

/// Toy layouts only. Throws RefusalError naming the blocking bit count when a
/// set's randomness exceeds options.max_random_bits.
AuditReport audit_evolving(const GenerationLayout& layout, unsigned ell, const EvolvingAuditOptions& options = {});

/// Inter-generation scheme at width w <= 6: every single share and pair of
/// generations 1 .. min(2^w - 1, 7), plus reconstruction of every triple.
AuditReport audit_inf_default(unsigned w);

std::string to_csv(const AuditReport& report, bool header = true);
std::string to_text(const AuditReport& report);

}  // namespace evss
