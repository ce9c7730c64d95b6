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
#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "evss/bits.hpp"
#include "evss/generations.hpp"
#include "evss/inf_scheme.hpp"
#include "evss/random.hpp"
#include "evss/static3.hpp"

// Evolving 3-threshold scheme. Generation g runs its own conventional scheme
// with S(G^g) curve shares plus the forward share sh_F^g = a2, and draws an
// ell-bit string SR^g. Participant t in generation g receives
//   P1  its share of the inter-generation scheme
//   P2  sh_F^1 .. sh_F^(g-1)
//   P3  curve share h(t) - 1 of generation g
//   P4  SR^j xor sh_F^g for j = 1 .. g-1
//   P5  SR^g

namespace evss {

/// Where a dealer's random choices come from. The dealer asks in a fixed
/// order: inf_coefficient(1), inf_coefficient(2) at construction, then for
/// each new generation g: inner_coefficient(g, 0), inner_coefficient(g, 1),
/// mask(g, ...).
class DealerCoins {
 public:
  virtual ~DealerCoins() = default;
  virtual BaseElem inf_coefficient(unsigned k, const BaseField& field) = 0;
  virtual ExtElem inner_coefficient(unsigned generation, unsigned k, const ExtField& field) = 0;
  virtual BitString mask(unsigned generation, std::size_t nbits) = 0;
};

/// Draws every coin from a random source, in request order.
class StreamCoins final : public DealerCoins {
 public:
  explicit StreamCoins(std::unique_ptr<RandomSource> source);
  BaseElem inf_coefficient(unsigned k, const BaseField& field) override;
  ExtElem inner_coefficient(unsigned generation, unsigned k, const ExtField& field) override;
  BitString mask(unsigned generation, std::size_t nbits) override;

 private:
  std::unique_ptr<RandomSource> source_;
};

/// Coins fixed in advance by integer value (coefficient bits packed as in
/// index_to_point). Anything not assigned is zero.
class AssignedCoins final : public DealerCoins {
 public:
  void set_inf(unsigned k, std::uint64_t value) { inf_[k] = value; }
  void set_inner(unsigned generation, unsigned k, BigUint value) { inner_[{generation, k}] = std::move(value); }
  void set_mask(unsigned generation, BigUint value) { masks_[generation] = std::move(value); }
  void clear();

  BaseElem inf_coefficient(unsigned k, const BaseField& field) override;
  ExtElem inner_coefficient(unsigned generation, unsigned k, const ExtField& field) override;
  BitString mask(unsigned generation, std::size_t nbits) override;

 private:
  std::map<unsigned, std::uint64_t> inf_;
  std::map<std::tuple<unsigned, unsigned>, BigUint> inner_;
  std::map<unsigned, BigUint> masks_;
};

/// Static parameters of generation g's inner scheme.
StaticParams inner_params(unsigned g, unsigned ell, const GenerationLayout& layout);

struct GenerationState {
  unsigned index = 0;
  StaticParams params;
  StaticDealerState inner;
  BitString sr;     // SR^g, ell bits
  BaseElem f_share; // sh_F^g = a2
};

struct ShareBundle {
  ParticipantLocus locus;
  unsigned ell = 0;
  GenerationLayout layout;
  InfShare p1;
  std::vector<BaseElem> p2;
  CurveShare p3;
  std::vector<BitString> p4;
  BitString p5;

  unsigned generation() const { return locus.generation; }
  friend bool operator==(const ShareBundle&, const ShareBundle&) = default;
};

class EvolvingDealer {
 public:
  /// `inf_width` 0 selects default_inf_width(ell).
  EvolvingDealer(const BaseElem& secret, GenerationLayout layout, std::unique_ptr<DealerCoins> coins,
                 unsigned inf_width = 0);

  /// Creates generation states 1 .. g(t) on first demand; later calls only
  /// read them.
  ShareBundle issue(const BigUint& t);
  const GenerationState& generation(unsigned g);

  unsigned ell() const { return secret_.ell; }
  const GenerationLayout& layout() const { return layout_; }
  const PolyInfScheme& inf() const { return inf_; }

 private:
  BaseElem secret_;
  GenerationLayout layout_;
  std::unique_ptr<DealerCoins> coins_;
  PolyInfScheme inf_;
  std::vector<GenerationState> gens_;
};

/// Dealer drawing from a deterministic seed or, without one, system entropy.
EvolvingDealer make_dealer(const BaseElem& secret, GenerationLayout layout, std::unique_ptr<RandomSource> source,
                           unsigned inf_width = 0);

enum class ReconstructionCase { inf_scheme = 1, same_generation = 2, two_low_one_high = 3, one_low_two_high = 4 };

/// Which route reconstruct takes for three generation indices.
ReconstructionCase classify(unsigned g1, unsigned g2, unsigned g3);

/// Secret from any three bundles of distinct participants.
BaseElem reconstruct(const ShareBundle& b1, const ShareBundle& b2, const ShareBundle& b3);

struct SizeReport {
  BigUint t;
  unsigned generation = 0;
  BigUint index_in_gen;
  unsigned ell = 0;
  unsigned m = 0;
  std::size_t p1_bits = 0;
  std::size_t p2_bits = 0;
  std::size_t p3_bits = 0;
  std::size_t p4_bits = 0;
  std::size_t p5_bits = 0;
  std::size_t total_bits = 0;
  /// total == p1 + ell*(2g - 1) + ell*m.
  bool identity_holds = false;
  /// Integer part of the bound other than lg t: B(P1) + ell*(2g - 1) + ell + 1.
  std::size_t bound_offset = 0;
  /// total <= lg t + bound_offset, decided exactly as 2^(total - offset) <= t.
  bool within_bound = false;
  /// The same with lg S(G^g) in place of lg t.
  bool within_bound_gen_size = false;
  double lg_t = 0;
  double lg_gen_size = 0;
  double bound() const { return lg_t + static_cast<double>(bound_offset); }
};

/// Size accounting for participant t without issuing a bundle.
SizeReport size_report(const BigUint& t, unsigned ell, const GenerationLayout& layout, unsigned inf_width = 0);
/// Size accounting measured on an issued bundle.
SizeReport bundle_size_bits(const ShareBundle& bundle);

}  // namespace evss
