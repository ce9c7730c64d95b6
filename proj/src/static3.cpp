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

#include "evss/static3.hpp"

#include <map>
#include <set>
#include <utility>

#include "evss/errors.hpp"

namespace evss {
namespace {

void check_secret(const BaseElem& secret, const StaticParams& params) {
  if (secret.ell != params.ell) throw ParameterError("secret must have exactly ell bits");
}

void check_curve_index(const BigUint& i, const StaticParams& params) {
  if (i < 0 || i >= params.curve_capacity()) throw ParameterError("curve index out of range");
}

}  // namespace

StaticParams make_static_params(unsigned ell, unsigned m, ParamMode mode) {
  if (ell < 1 || ell > kMaxBaseDegree) throw ParameterError("ell must be in [1, 63]");
  if (m < 1) throw ParameterError("extension degree must be at least 1");
  if (m < 2 && mode == ParamMode::production) {
    throw ParameterError("production parameters need m >= 2 (m = 1 is audit-only)");
  }
  return {ell, m, ExtField::canonical(ell, m)};
}

StaticDealerState static_split(const BaseElem& secret, const StaticParams& params, ExtElem a0, ExtElem a1) {
  check_secret(secret, params);
  const ExtField& F = params.ext();
  F.check(a0);
  F.check(a1);
  BaseElem a2 = proj_const(F.add(a1, F.embed(secret)));
  return {std::move(a0), std::move(a1), a2, secret};
}

StaticDealerState static_split(const BaseElem& secret, const StaticParams& params, RandomSource& rng) {
  const ExtField& F = params.ext();
  ExtElem a0 = F.from_bits(rng.bits(F.total_bits()));
  ExtElem a1 = F.from_bits(rng.bits(F.total_bits()));
  return static_split(secret, params, std::move(a0), std::move(a1));
}

ExtElem curve_point(const StaticParams& params, const BigUint& curve_index) {
  check_curve_index(curve_index, params);
  return params.ext().index_to_point(curve_index * 2);
}

ExtElem evaluate(const StaticDealerState& state, const StaticParams& params, const ExtElem& w) {
  const ExtField& F = params.ext();
  // Horner: a0 + w*(a1 + w*a2)
  ExtElem acc = F.add(state.a1, F.scale(state.a2, w));
  return F.add(state.a0, F.mul(acc, w));
}

CurveShare share_at(const StaticDealerState& state, const StaticParams& params, const BigUint& curve_index) {
  return {curve_index, evaluate(state, params, curve_point(params, curve_index))};
}

BaseElem static_fshare(const StaticDealerState& state) { return state.a2; }

Quadratic interpolate_quadratic(const ExtElem (&xs)[3], const ExtElem (&zs)[3], const ExtField& F) {
  Quadratic q{F.zero(), F.zero(), F.zero()};
  for (int i = 0; i < 3; ++i) {
    const ExtElem& xj = xs[(i + 1) % 3];
    const ExtElem& xk = xs[(i + 2) % 3];
    ExtElem denom = F.mul(F.add(xs[i], xj), F.add(xs[i], xk));
    ExtElem w = F.mul(zs[i], F.inv(denom));
    q.a2 = F.add(q.a2, w);
    q.a1 = F.add(q.a1, F.mul(w, F.add(xj, xk)));
    q.a0 = F.add(q.a0, F.mul(w, F.mul(xj, xk)));
  }
  return q;
}

BaseElem closed_form_three(const CurveShare& s1, const CurveShare& s2, const CurveShare& s3,
                           const StaticParams& params) {
  const ExtField& F = params.ext();
  const ExtElem bi = curve_point(params, s1.curve_index);
  const ExtElem bj = curve_point(params, s2.curve_index);
  const ExtElem bk = curve_point(params, s3.curve_index);
  const ExtElem one = F.one();
  // Subtraction is addition in characteristic 2.
  auto sub = [&](const ExtElem& a, const ExtElem& b) { return F.add(a, b); };
  const ExtElem denom = F.mul(F.mul(sub(bi, bj), sub(bi, bk)), sub(bj, bk));
  const ExtElem denom_inv = F.inv(denom);
  ExtElem num = F.mul(F.mul(sub(F.add(bj, bk), one), sub(bk, bj)), s1.value);
  num = F.add(num, F.mul(F.mul(sub(F.add(bi, bk), one), sub(bi, bk)), s2.value));
  num = F.add(num, F.mul(F.mul(sub(F.add(bi, bj), one), sub(bj, bi)), s3.value));
  return proj_const(F.mul(num, denom_inv));
}

BaseElem reconstruct_three(const CurveShare& s1, const CurveShare& s2, const CurveShare& s3,
                           const StaticParams& params) {
  if (s1.curve_index == s2.curve_index || s1.curve_index == s3.curve_index || s2.curve_index == s3.curve_index) {
    throw ParameterError("reconstruct_three needs three distinct curve indices");
  }
  const ExtField& F = params.ext();
  F.check(s1.value);
  F.check(s2.value);
  F.check(s3.value);
  const ExtElem xs[3] = {curve_point(params, s1.curve_index), curve_point(params, s2.curve_index),
                         curve_point(params, s3.curve_index)};
  const ExtElem zs[3] = {s1.value, s2.value, s3.value};
  const Quadratic q = interpolate_quadratic(xs, zs, F);
  if (!F.in_base_subfield(q.a2)) {
    throw VerificationError("curve shares do not lie on a dealer polynomial (a2 outside the base field)");
  }
  const BaseElem secret = base_add(proj_const(q.a1), proj_const(q.a2));
  if (closed_form_three(s1, s2, s3, params) != secret) {
    throw VerificationError("closed-form reconstruction disagrees with interpolation");
  }
  return secret;
}

BaseElem reconstruct_two_plus_f(const CurveShare& s1, const CurveShare& s2, const BaseElem& a2,
                                const StaticParams& params) {
  if (s1.curve_index == s2.curve_index) throw ParameterError("reconstruct_two_plus_f needs distinct curve indices");
  const ExtField& F = params.ext();
  F.check(s1.value);
  F.check(s2.value);
  params.base().check(a2);
  const ExtElem bi = curve_point(params, s1.curve_index);
  const ExtElem bj = curve_point(params, s2.curve_index);
  const ExtElem zi = F.add(s1.value, F.scale(a2, F.square(bi)));
  const ExtElem zj = F.add(s2.value, F.scale(a2, F.square(bj)));
  const ExtElem a1 = F.div(F.add(zi, zj), F.add(bi, bj));
  return base_add(a2, proj_const(a1));
}

LeakReport odd_point_leak_report(const StaticParams& params, std::size_t max_mixed_pairs) {
  const unsigned bits = params.ell * params.m;
  if (bits > 10) throw RefusalError("odd_point_leak_report enumerates GF(2^(ell*m))^2; needs ell*m <= 10");
  const ExtField& F = params.ext();
  const std::uint64_t npoints = std::uint64_t{1} << bits;
  const std::uint64_t nsecrets = std::uint64_t{1} << params.ell;

  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::size_t mixed = 0;
  for (std::uint64_t i = 0; i < npoints; ++i) {
    for (std::uint64_t j = i + 1; j < npoints; ++j) {
      bool is_mixed = ((i + j) & 1u) != 0;
      if (is_mixed && max_mixed_pairs != 0 && mixed == max_mixed_pairs) continue;
      pairs.emplace_back(i, j);
      if (is_mixed) ++mixed;
    }
  }
  std::set<std::uint64_t> needed;
  for (auto [i, j] : pairs) {
    needed.insert(i);
    needed.insert(j);
  }
  std::map<std::uint64_t, ExtElem> points;
  for (auto p : needed) points.emplace(p, F.index_to_point(p));

  LeakReport report;
  report.ell = params.ell;
  report.m = params.m;
  // tallies[pair][secret]
  std::vector<std::vector<Tally>> tallies(pairs.size());
  for (auto& per_secret : tallies) per_secret.assign(nsecrets, Tally(2 * bits));

  std::map<std::uint64_t, ExtElem> values;
  for (std::uint64_t s = 0; s < nsecrets; ++s) {
    const BaseElem secret = params.base().elem(s);
    for (std::uint64_t u = 0; u < npoints; ++u) {
      for (std::uint64_t v = 0; v < npoints; ++v) {
        const StaticDealerState st = static_split(secret, params, F.index_to_point(u), F.index_to_point(v));
        for (const auto& [idx, beta] : points) values.insert_or_assign(idx, evaluate(st, params, beta));
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          const auto [i, j] = pairs[p];
          const ExtElem& zi = values.at(i);
          const ExtElem& zj = values.at(j);
          std::uint64_t key = static_cast<std::uint64_t>(F.point_to_index(zi)) |
                              (static_cast<std::uint64_t>(F.point_to_index(zj)) << bits);
          tallies[p][s].add(key);
          if (((i + j) & 1u) != 0) {
            const ExtElem q = F.div(F.add(zj, zi), F.add(points.at(j), points.at(i)));
            ++report.rule_transcripts;
            if ((proj_const(q).bits & 1u) == (s & 1u)) ++report.rule_agreements;
          }
        }
      }
    }
  }

  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    const bool is_mixed = ((i + j) & 1u) != 0;
    for (std::uint64_t s0 = 0; s0 < nsecrets; ++s0) {
      for (std::uint64_t s1 = s0 + 1; s1 < nsecrets; ++s1) {
        Rational d = statistical_distance(tallies[p][s0], tallies[p][s1]);
        report.rows.push_back({i, j, is_mixed, s0, s1, d});
        Rational& slot = is_mixed ? report.max_mixed_distance : report.max_even_distance;
        if (slot < d) slot = d;
      }
    }
  }
  return report;
}

}  // namespace evss
