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

#include <memory>
#include <vector>

#include "evss/evolving.hpp"

// The earlier, insecure layout: every generation's inner scheme also hands
// out a backward share sh_B^g (curve index 0, participants use 1 .. S), and
// P4 masks sh_B^g instead of sh_F^g. Two colluders from generations
// 2 <= i1 < i2 can peel the masks and recover the secret. Kept for
// demonstration only; these bundles have no file format.

namespace evss {

/// Extension degree of generation g in this variant: smallest m >= 2 with
/// 2^(ell*m - 1) >= S(G^g) + 1 (one extra curve point for sh_B).
unsigned flawed_inner_degree(unsigned g, unsigned ell, const GenerationLayout& layout);
/// Generations the variant serves: all of a toy layout, or four of the paper
/// layout.
unsigned flawed_generation_cap(const GenerationLayout& layout);
/// SR width: every generation's sh_B must fit under every SR^j, so masks are
/// as wide as the widest served generation.
std::size_t flawed_mask_bits(unsigned ell, const GenerationLayout& layout);

struct FlawedGenerationState {
  unsigned index = 0;
  StaticParams params;
  StaticDealerState inner;
  BitString sr;
  BaseElem f_share;
  ExtElem b_share;  // F(beta_0) = a0
};

struct FlawedBundle {
  ParticipantLocus locus;
  unsigned ell = 0;
  GenerationLayout layout;
  InfShare p1;
  std::vector<BaseElem> p2;      // sh_F^j
  CurveShare p3;                 // curve index h
  std::vector<BitString> p4;     // SR^j xor sh_B^g (zero-extended)
  BitString p5;                  // SR^g

  unsigned generation() const { return locus.generation; }
  friend bool operator==(const FlawedBundle&, const FlawedBundle&) = default;
};

class FlawedDealer {
 public:
  FlawedDealer(const BaseElem& secret, GenerationLayout layout, std::unique_ptr<DealerCoins> coins,
               unsigned inf_width = 0);

  FlawedBundle issue(const BigUint& t);
  const FlawedGenerationState& generation(unsigned g);
  unsigned ell() const { return secret_.ell; }

 private:
  BaseElem secret_;
  GenerationLayout layout_;
  std::unique_ptr<DealerCoins> coins_;
  PolyInfScheme inf_;
  std::size_t mask_bits_;
  std::vector<FlawedGenerationState> gens_;
};

StaticParams flawed_inner_params(unsigned g, unsigned ell, const GenerationLayout& layout);

/// Reconstruction for three distinct participants (the variant is correct).
BaseElem flawed_reconstruct(const FlawedBundle& b1, const FlawedBundle& b2, const FlawedBundle& b3);

/// Secret from two colluders in generations 2 <= i1 < i2:
///   sh_B^i2 = P5(low) xor P4(high)[i1]
///   SR^1    = sh_B^i2 xor P4(high)[1]
///   sh_B^i1 = SR^1 xor P4(low)[1]
///   sh_F^i1 = P2(high)[i1]
/// then sh_B^i1, P3(low) and sh_F^i1 determine the secret.
BaseElem two_party_attack(const FlawedBundle& low, const FlawedBundle& high);

}  // namespace evss
