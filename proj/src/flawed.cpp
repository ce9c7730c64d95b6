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

#include "evss/flawed.hpp"

#include <algorithm>
#include <array>

#include "evss/errors.hpp"

namespace evss {
namespace {

constexpr unsigned kPaperFlawedGenerations = 4;

ExtElem ext_from_mask(const BitString& bits, const ExtField& field) {
  const BitString head = bits.resized(field.total_bits());
  if (head.resized(bits.size()) != bits) throw VerificationError("unmasked backward share overflows its field");
  return field.from_bits(head);
}

}  // namespace

unsigned flawed_inner_degree(unsigned g, unsigned ell, const GenerationLayout& layout) {
  if (ell < 1) throw ParameterError("ell must be positive");
  const unsigned need = ceil_lg(layout.gen_size(g) + 1) + 1;
  const unsigned m = (need + ell - 1) / ell;
  return m < 2 ? 2 : m;
}

unsigned flawed_generation_cap(const GenerationLayout& layout) {
  return layout.is_paper() ? kPaperFlawedGenerations : layout.max_generation();
}

std::size_t flawed_mask_bits(unsigned ell, const GenerationLayout& layout) {
  unsigned widest = 0;
  for (unsigned g = 1; g <= flawed_generation_cap(layout); ++g) {
    widest = std::max(widest, flawed_inner_degree(g, ell, layout));
  }
  return std::size_t{ell} * widest;
}

StaticParams flawed_inner_params(unsigned g, unsigned ell, const GenerationLayout& layout) {
  return make_static_params(ell, flawed_inner_degree(g, ell, layout));
}

FlawedDealer::FlawedDealer(const BaseElem& secret, GenerationLayout layout, std::unique_ptr<DealerCoins> coins,
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
      }()),
      mask_bits_(flawed_mask_bits(secret.ell, layout_)) {}

const FlawedGenerationState& FlawedDealer::generation(unsigned g) {
  if (g == 0) throw ParameterError("generations are numbered from 1");
  if (g > flawed_generation_cap(layout_)) throw CapacityError("generation beyond what the flawed variant serves");
  while (gens_.size() < g) {
    const unsigned index = static_cast<unsigned>(gens_.size()) + 1;
    StaticParams params = flawed_inner_params(index, ell(), layout_);
    ExtElem a0 = coins_->inner_coefficient(index, 0, params.ext());
    ExtElem a1 = coins_->inner_coefficient(index, 1, params.ext());
    StaticDealerState inner = static_split(secret_, params, std::move(a0), std::move(a1));
    BitString sr = coins_->mask(index, mask_bits_);
    BaseElem f_share = static_fshare(inner);
    ExtElem b_share = share_at(inner, params, 0).value;
    gens_.push_back({index, std::move(params), std::move(inner), std::move(sr), f_share, std::move(b_share)});
  }
  return gens_[g - 1];
}

FlawedBundle FlawedDealer::issue(const BigUint& t) {
  ParticipantLocus locus = layout_.index_in_gen(t);
  const unsigned g = locus.generation;
  const FlawedGenerationState& own = generation(g);
  const BitString b_mask = own.params.ext().to_bits(own.b_share).resized(mask_bits_);

  FlawedBundle b;
  b.ell = ell();
  b.layout = layout_;
  b.p1 = inf_.share(g);
  for (unsigned j = 1; j < g; ++j) {
    b.p2.push_back(gens_[j - 1].f_share);
    b.p4.push_back(gens_[j - 1].sr ^ b_mask);
  }
  b.p3 = share_at(own.inner, own.params, locus.index_in_gen);
  b.p5 = own.sr;
  b.locus = std::move(locus);
  return b;
}

BaseElem flawed_reconstruct(const FlawedBundle& b1, const FlawedBundle& b2, const FlawedBundle& b3) {
  std::array<const FlawedBundle*, 3> b{&b1, &b2, &b3};
  for (const FlawedBundle* x : b) {
    if (x->ell != b1.ell || x->layout != b1.layout) throw ParameterError("bundles come from different parameter sets");
    if (x->p2.size() + 1 != x->generation() || x->p4.size() + 1 != x->generation()) {
      throw ParameterError("bundle piece counts do not match its generation");
    }
  }
  if (b1.locus.t == b2.locus.t || b1.locus.t == b3.locus.t || b2.locus.t == b3.locus.t) {
    throw ParameterError("reconstruction needs three distinct participants");
  }
  std::sort(b.begin(), b.end(), [](const FlawedBundle* x, const FlawedBundle* y) {
    return std::tie(x->locus.generation, x->locus.t) < std::tie(y->locus.generation, y->locus.t);
  });
  const unsigned ell = b1.ell;
  const unsigned lo = b[0]->generation();
  const unsigned hi = b[2]->generation();

  switch (classify(b[0]->generation(), b[1]->generation(), b[2]->generation())) {
    case ReconstructionCase::inf_scheme:
      return PolyInfScheme::combine({b[0]->p1, b[1]->p1, b[2]->p1}, ell);
    case ReconstructionCase::same_generation:
      return reconstruct_three(b[0]->p3, b[1]->p3, b[2]->p3, flawed_inner_params(lo, ell, b1.layout));
    case ReconstructionCase::two_low_one_high:
      return reconstruct_two_plus_f(b[0]->p3, b[1]->p3, b[2]->p2[lo - 1], flawed_inner_params(lo, ell, b1.layout));
    case ReconstructionCase::one_low_two_high: {
      // SR^lo from the low bundle opens sh_B^hi, a third curve share.
      const StaticParams params = flawed_inner_params(hi, ell, b1.layout);
      const CurveShare backward{0, ext_from_mask(b[1]->p4[lo - 1] ^ b[0]->p5, params.ext())};
      return reconstruct_three(backward, b[1]->p3, b[2]->p3, params);
    }
  }
  throw VerificationError("unreachable reconstruction case");
}

BaseElem two_party_attack(const FlawedBundle& low, const FlawedBundle& high) {
  if (low.ell != high.ell || low.layout != high.layout) throw ParameterError("bundles come from different parameter sets");
  const unsigned i1 = low.generation();
  const unsigned i2 = high.generation();
  if (i1 < 2) {
    throw ParameterError("the attack needs the low colluder in generation 2 or later; generation 1 holds no backward "
                         "share to unmask");
  }
  if (i2 <= i1) throw ParameterError("the attack needs the high colluder in a strictly later generation");
  if (low.p4.size() + 1 != i1 || high.p4.size() + 1 != i2 || high.p2.size() + 1 != i2) {
    throw ParameterError("bundle piece counts do not match its generation");
  }
  const BitString backward_high = low.p5 ^ high.p4[i1 - 1];
  const BitString sr1 = backward_high ^ high.p4[0];
  const BitString backward_low = sr1 ^ low.p4[0];
  const BaseElem f_share = high.p2[i1 - 1];

  const StaticParams params = flawed_inner_params(i1, low.ell, low.layout);
  const CurveShare b_share{0, ext_from_mask(backward_low, params.ext())};
  return reconstruct_two_plus_f(b_share, low.p3, f_share, params);
}

}  // namespace evss
