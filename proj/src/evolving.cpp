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

#include "evss/evolving.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "evss/errors.hpp"

namespace evss {
namespace {

BaseElem to_base(const BitString& bits, unsigned ell) { return {bits.read_uint(0, ell), ell}; }

BitString to_bits(const BaseElem& e) { return BitString::from_uint(e.bits, e.ell); }

double lg(const BigUint& v) {
  const unsigned len = bit_length(v);
  if (len <= 53) return std::log2(static_cast<double>(v));
  // Keep the top 53 bits; the rest cannot move a double.
  const unsigned shift = len - 53;
  return std::log2(static_cast<double>(BigUint(v >> shift))) + shift;
}

// 2^exponent <= v for a possibly negative exponent.
bool pow2_at_most(long long exponent, const BigUint& v) {
  if (exponent < 0) return true;
  return pow2(static_cast<unsigned>(exponent)) <= v;
}

}  // namespace

StreamCoins::StreamCoins(std::unique_ptr<RandomSource> source) : source_(std::move(source)) {
  if (!source_) throw ParameterError("StreamCoins needs a random source");
}

BaseElem StreamCoins::inf_coefficient(unsigned, const BaseField& field) {
  return field.elem(source_->uint_bits(field.ell()));
}

ExtElem StreamCoins::inner_coefficient(unsigned, unsigned, const ExtField& field) {
  return field.from_bits(source_->bits(field.total_bits()));
}

BitString StreamCoins::mask(unsigned, std::size_t nbits) { return source_->bits(nbits); }

void AssignedCoins::clear() {
  inf_.clear();
  inner_.clear();
  masks_.clear();
}

BaseElem AssignedCoins::inf_coefficient(unsigned k, const BaseField& field) {
  auto it = inf_.find(k);
  return field.elem(it == inf_.end() ? 0 : it->second);
}

ExtElem AssignedCoins::inner_coefficient(unsigned generation, unsigned k, const ExtField& field) {
  auto it = inner_.find({generation, k});
  return it == inner_.end() ? field.zero() : field.index_to_point(it->second);
}

BitString AssignedCoins::mask(unsigned generation, std::size_t nbits) {
  auto it = masks_.find(generation);
  if (it == masks_.end()) return BitString(nbits);
  if (bit_length(it->second) > nbits) throw ParameterError("assigned mask is wider than requested");
  return BitString::from_biguint(it->second, nbits);
}

StaticParams inner_params(unsigned g, unsigned ell, const GenerationLayout& layout) {
  return make_static_params(ell, inner_degree(g, ell, layout));
}

EvolvingDealer::EvolvingDealer(const BaseElem& secret, GenerationLayout layout, std::unique_ptr<DealerCoins> coins,
                               unsigned inf_width)
    : secret_(secret),
      layout_(std::move(layout)),
      coins_(std::move(coins)),
      inf_([&] {
        if (!coins_) throw ParameterError("dealer needs a coin source");
        if (secret.ell < 1 || secret.ell > kMaxBaseDegree) throw ParameterError("ell must be in [1, 63]");
        BaseField::canonical(secret.ell).check(secret);
        const unsigned width = inf_width == 0 ? default_inf_width(secret.ell) : inf_width;
        if (width < secret.ell || width > kMaxBaseDegree) throw ParameterError("bad inter-generation width");
        const BaseField field = BaseField::canonical(width);
        BaseElem c1 = coins_->inf_coefficient(1, field);
        BaseElem c2 = coins_->inf_coefficient(2, field);
        return PolyInfScheme(secret, width, c1, c2);
      }()) {}

const GenerationState& EvolvingDealer::generation(unsigned g) {
  if (g == 0) throw ParameterError("generations are numbered from 1");
  if (g > layout_.max_generation()) throw CapacityError("generation beyond the layout");
  while (gens_.size() < g) {
    const unsigned index = static_cast<unsigned>(gens_.size()) + 1;
    StaticParams params = inner_params(index, ell(), layout_);
    ExtElem a0 = coins_->inner_coefficient(index, 0, params.ext());
    ExtElem a1 = coins_->inner_coefficient(index, 1, params.ext());
    StaticDealerState inner = static_split(secret_, params, std::move(a0), std::move(a1));
    BitString sr = coins_->mask(index, ell());
    BaseElem f_share = static_fshare(inner);
    gens_.push_back({index, std::move(params), std::move(inner), std::move(sr), f_share});
  }
  return gens_[g - 1];
}

ShareBundle EvolvingDealer::issue(const BigUint& t) {
  ParticipantLocus locus = layout_.index_in_gen(t);
  const unsigned g = locus.generation;
  const GenerationState& own = generation(g);

  ShareBundle b;
  b.ell = ell();
  b.layout = layout_;
  b.p1 = inf_.share(g);
  for (unsigned j = 1; j < g; ++j) {
    b.p2.push_back(gens_[j - 1].f_share);
    b.p4.push_back(gens_[j - 1].sr ^ to_bits(own.f_share));
  }
  b.p3 = share_at(own.inner, own.params, locus.index_in_gen - 1);
  b.p5 = own.sr;
  b.locus = std::move(locus);
  return b;
}

EvolvingDealer make_dealer(const BaseElem& secret, GenerationLayout layout, std::unique_ptr<RandomSource> source,
                           unsigned inf_width) {
  return EvolvingDealer(secret, std::move(layout), std::make_unique<StreamCoins>(std::move(source)), inf_width);
}

ReconstructionCase classify(unsigned g1, unsigned g2, unsigned g3) {
  std::array<unsigned, 3> g{g1, g2, g3};
  std::sort(g.begin(), g.end());
  if (g[0] == g[2]) return ReconstructionCase::same_generation;
  if (g[0] == g[1]) return ReconstructionCase::two_low_one_high;
  if (g[1] == g[2]) return ReconstructionCase::one_low_two_high;
  return ReconstructionCase::inf_scheme;
}

BaseElem reconstruct(const ShareBundle& b1, const ShareBundle& b2, const ShareBundle& b3) {
  std::array<const ShareBundle*, 3> b{&b1, &b2, &b3};
  for (const ShareBundle* x : b) {
    if (x->ell != b1.ell || x->layout != b1.layout) throw ParameterError("bundles come from different parameter sets");
    if (x->p1.value.ell != b1.p1.value.ell) throw ParameterError("bundles use different inter-generation widths");
    if (x->p2.size() + 1 != x->generation() || x->p4.size() + 1 != x->generation()) {
      throw ParameterError("bundle piece counts do not match its generation");
    }
  }
  if (b1.locus.t == b2.locus.t || b1.locus.t == b3.locus.t || b2.locus.t == b3.locus.t) {
    throw ParameterError("reconstruction needs three distinct participants");
  }
  std::sort(b.begin(), b.end(), [](const ShareBundle* x, const ShareBundle* y) {
    return std::tie(x->locus.generation, x->locus.t) < std::tie(y->locus.generation, y->locus.t);
  });
  const unsigned ell = b1.ell;
  const unsigned lo = b[0]->generation();
  const unsigned hi = b[2]->generation();

  switch (classify(b[0]->generation(), b[1]->generation(), b[2]->generation())) {
    case ReconstructionCase::inf_scheme:
      return PolyInfScheme::combine({b[0]->p1, b[1]->p1, b[2]->p1}, ell);
    case ReconstructionCase::same_generation:
      return reconstruct_three(b[0]->p3, b[1]->p3, b[2]->p3, inner_params(lo, ell, b1.layout));
    case ReconstructionCase::two_low_one_high: {
      const BaseElem f_share = b[2]->p2[lo - 1];
      return reconstruct_two_plus_f(b[0]->p3, b[1]->p3, f_share, inner_params(lo, ell, b1.layout));
    }
    case ReconstructionCase::one_low_two_high: {
      // The lowest bundle's SR unmasks a high bundle's P4 entry.
      const BaseElem f_share = to_base(b[1]->p4[lo - 1] ^ b[0]->p5, ell);
      return reconstruct_two_plus_f(b[1]->p3, b[2]->p3, f_share, inner_params(hi, ell, b1.layout));
    }
  }
  throw VerificationError("unreachable reconstruction case");
}

SizeReport size_report(const BigUint& t, unsigned ell, const GenerationLayout& layout, unsigned inf_width) {
  const ParticipantLocus locus = layout.index_in_gen(t);
  const unsigned g = locus.generation;
  SizeReport r;
  r.t = t;
  r.generation = g;
  r.index_in_gen = locus.index_in_gen;
  r.ell = ell;
  r.m = inner_degree(g, ell, layout);
  r.p1_bits = inf_width == 0 ? default_inf_width(ell) : inf_width;
  r.p2_bits = std::size_t{g - 1} * ell;
  r.p3_bits = std::size_t{ell} * r.m;
  r.p4_bits = std::size_t{g - 1} * ell;
  r.p5_bits = ell;
  r.total_bits = r.p1_bits + r.p2_bits + r.p3_bits + r.p4_bits + r.p5_bits;
  r.identity_holds = r.total_bits == r.p1_bits + std::size_t{ell} * (2 * g - 1) + std::size_t{ell} * r.m;
  r.bound_offset = r.p1_bits + std::size_t{ell} * (2 * g - 1) + ell + 1;
  const long long excess = static_cast<long long>(r.total_bits) - static_cast<long long>(r.bound_offset);
  r.within_bound = pow2_at_most(excess, t);
  const BigUint size = layout.gen_size(g);
  r.within_bound_gen_size = pow2_at_most(excess, size);
  r.lg_t = lg(t);
  r.lg_gen_size = lg(size);
  return r;
}

SizeReport bundle_size_bits(const ShareBundle& bundle) {
  SizeReport r = size_report(bundle.locus.t, bundle.ell, bundle.layout, bundle.p1.value.ell);
  r.p1_bits = bundle.p1.value.ell;
  r.p2_bits = 0;
  for (const auto& e : bundle.p2) r.p2_bits += e.ell;
  r.p3_bits = bundle.p3.value.coeffs.size() * bundle.ell;
  r.p4_bits = 0;
  for (const auto& e : bundle.p4) r.p4_bits += e.size();
  r.p5_bits = bundle.p5.size();
  r.total_bits = r.p1_bits + r.p2_bits + r.p3_bits + r.p4_bits + r.p5_bits;
  const unsigned g = r.generation;
  r.identity_holds = r.total_bits == r.p1_bits + std::size_t{r.ell} * (2 * g - 1) + std::size_t{r.ell} * r.m;
  const long long excess = static_cast<long long>(r.total_bits) - static_cast<long long>(r.bound_offset);
  r.within_bound = pow2_at_most(excess, r.t);
  r.within_bound_gen_size = pow2_at_most(excess, bundle.layout.gen_size(g));
  return r;
}

}  // namespace evss
