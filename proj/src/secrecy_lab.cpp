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

#include "evss/secrecy_lab.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "evss/bits.hpp"
#include "evss/errors.hpp"
#include "evss/evolving.hpp"
#include "evss/flawed.hpp"
#include "evss/inf_scheme.hpp"

namespace evss {
namespace {

// Compares every pair of secrets for one audited set.
void emit_rows(AuditReport& report, const std::string& set, const std::vector<Tally>& per_secret) {
  for (std::size_t s0 = 0; s0 < per_secret.size(); ++s0) {
    for (std::size_t s1 = s0 + 1; s1 < per_secret.size(); ++s1) {
      report.rows.push_back({set, s0, s1, statistical_distance(per_secret[s0], per_secret[s1])});
    }
  }
}

void add_view(Tally& tally, const BitWriter& view) {
  if (view.size() <= 64) {
    tally.add(view.as_uint());
  } else {
    const auto& bytes = view.bytes();
    tally.add(std::string(bytes.begin(), bytes.end()));
  }
}

// ---- evolving -------------------------------------------------------------

struct CoinVar {
  enum class Kind { inf, inner, inner_const, mask } kind;
  unsigned generation;
  unsigned k;
  unsigned bits;
};

unsigned degree_of(unsigned g, unsigned ell, const GenerationLayout& layout, Variant v) {
  return v == Variant::revised ? inner_degree(g, ell, layout) : flawed_inner_degree(g, ell, layout);
}

std::vector<CoinVar> plan_coins(const std::vector<unsigned>& gens, const GenerationLayout& layout, unsigned ell,
                                const EvolvingAuditOptions& opt) {
  const unsigned top = *std::max_element(gens.begin(), gens.end());
  const unsigned mask_bits = opt.variant == Variant::revised ? ell : static_cast<unsigned>(flawed_mask_bits(ell, layout));
  std::vector<CoinVar> vars;
  vars.push_back({CoinVar::Kind::inf, 0, 1, opt.inf_width});
  vars.push_back({CoinVar::Kind::inf, 0, 2, opt.inf_width});
  for (unsigned g = 1; g <= top; ++g) {
    const unsigned width = ell * degree_of(g, ell, layout, opt.variant);
    const bool own = std::find(gens.begin(), gens.end(), g) != gens.end();
    if (own || !opt.marginalize) {
      vars.push_back({CoinVar::Kind::inner, g, 0, width});
      vars.push_back({CoinVar::Kind::inner, g, 1, width});
    } else {
      // Only sh_F^g = proj_const(a1) + s is visible from outside generation g.
      vars.push_back({CoinVar::Kind::inner_const, g, 1, ell});
    }
    vars.push_back({CoinVar::Kind::mask, g, 0, mask_bits});
  }
  return vars;
}

void assign(AssignedCoins& coins, const std::vector<CoinVar>& vars, std::uint64_t packed) {
  coins.clear();
  for (const CoinVar& v : vars) {
    const std::uint64_t value = packed & ((std::uint64_t{1} << v.bits) - 1);
    packed >>= v.bits;
    switch (v.kind) {
      case CoinVar::Kind::inf:
        coins.set_inf(v.k, value);
        break;
      case CoinVar::Kind::inner:
      case CoinVar::Kind::inner_const:
        coins.set_inner(v.generation, v.k, value);
        break;
      case CoinVar::Kind::mask:
        coins.set_mask(v.generation, value);
        break;
    }
  }
}

template <class Bundle>
void write_view(BitWriter& w, const Bundle& b) {
  w.put(b.p1.value.bits, b.p1.value.ell);
  for (const auto& e : b.p2) w.put(e.bits, e.ell);
  for (auto c : b.p3.value.coeffs) w.put(c, b.ell);
  for (const auto& e : b.p4) w.put(e);
  w.put(b.p5);
}

struct Cell {
  std::vector<BigUint> members;
  std::string name;
};

struct Group {
  std::vector<unsigned> generations;
  std::vector<Cell> cells;
};

template <class Dealer>
void run_group(AuditReport& report, const Group& group, const GenerationLayout& layout, unsigned ell,
               const EvolvingAuditOptions& opt) {
  const std::vector<CoinVar> vars = plan_coins(group.generations, layout, ell, opt);
  unsigned total_bits = 0;
  for (const auto& v : vars) total_bits += v.bits;

  std::set<BigUint> participants;
  for (const auto& c : group.cells) participants.insert(c.members.begin(), c.members.end());
  const std::vector<BigUint> order(participants.begin(), participants.end());
  auto slot_of = [&](const BigUint& t) {
    return static_cast<std::size_t>(std::lower_bound(order.begin(), order.end(), t) - order.begin());
  };

  const std::uint64_t nsecrets = std::uint64_t{1} << ell;
  std::vector<std::vector<Tally>> tallies;
  std::vector<std::vector<std::size_t>> cell_slots;
  for (const auto& c : group.cells) {
    std::vector<std::size_t> slots;
    for (const auto& t : c.members) slots.push_back(slot_of(t));
    cell_slots.push_back(std::move(slots));
  }

  std::vector<BitWriter> views(order.size());
  for (std::uint64_t s = 0; s < nsecrets; ++s) {
    const BaseElem secret{s, ell};
    for (std::uint64_t packed = 0; packed < (std::uint64_t{1} << total_bits); ++packed) {
      auto coins = std::make_unique<AssignedCoins>();
      assign(*coins, vars, packed);
      Dealer dealer(secret, layout, std::move(coins), opt.inf_width);
      for (std::size_t i = 0; i < order.size(); ++i) {
        views[i] = BitWriter{};
        write_view(views[i], dealer.issue(order[i]));
      }
      for (std::size_t c = 0; c < group.cells.size(); ++c) {
        BitWriter joint;
        for (std::size_t slot : cell_slots[c]) {
          const BitWriter& v = views[slot];
          joint.put(BitString::from_bytes(v.bytes(), v.size()));
        }
        if (tallies.size() <= c) tallies.emplace_back(nsecrets, Tally(static_cast<unsigned>(joint.size())));
        add_view(tallies[c][s], joint);
      }
      ++report.enumerated;
    }
  }
  for (std::size_t c = 0; c < group.cells.size(); ++c) emit_rows(report, group.cells[c].name, tallies[c]);
}

}  // namespace

Rational AuditReport::max_distance() const {
  Rational best;
  for (const auto& r : rows) {
    if (best < r.distance) best = r.distance;
  }
  return best;
}

bool AuditReport::pass() const {
  if (check_failures != 0) return false;
  return std::all_of(rows.begin(), rows.end(), [](const AuditRow& r) { return r.distance.is_zero(); });
}

AuditReport audit_static(const StaticParams& params, bool admit_odd) {
  const unsigned bits = params.ell * params.m;
  if (2 * bits > 16) {
    throw RefusalError("audit_static enumerates 2^(2*ell*m) dealers; needs 2*ell*m <= 16, got " +
                       std::to_string(2 * bits));
  }
  const ExtField& F = params.ext();
  const std::uint64_t npoints = std::uint64_t{1} << bits;
  const std::uint64_t nsecrets = std::uint64_t{1} << params.ell;
  const std::uint64_t ncurve = npoints / 2;

  AuditReport report;
  report.scheme = "static3";
  report.params = "ell=" + std::to_string(params.ell) + " m=" + std::to_string(params.m);

  // Share slots: curve shares 0 .. ncurve-1, then a2.
  const std::size_t nshares = ncurve + 1;
  std::vector<ExtElem> points;
  for (std::uint64_t i = 0; i < ncurve; ++i) points.push_back(curve_point(params, i));
  auto name = [&](std::size_t slot) { return slot == ncurve ? std::string("a2") : "Z" + std::to_string(slot); };

  auto for_each_dealer = [&](auto&& visit) {
    for (std::uint64_t s = 0; s < nsecrets; ++s) {
      for (std::uint64_t u = 0; u < npoints; ++u) {
        for (std::uint64_t v = 0; v < npoints; ++v) {
          visit(s, static_split(params.base().elem(s), params, F.index_to_point(u), F.index_to_point(v)));
        }
      }
    }
  };
  auto view = [&](const StaticDealerState& st, std::size_t slot) -> std::uint64_t {
    if (slot == ncurve) return st.a2.bits;
    return static_cast<std::uint64_t>(F.point_to_index(evaluate(st, params, points[slot])));
  };

  std::vector<std::vector<Tally>> singles(nshares, std::vector<Tally>(nsecrets, Tally(bits)));
  for_each_dealer([&](std::uint64_t s, const StaticDealerState& st) {
    for (std::size_t i = 0; i < nshares; ++i) singles[i][s].add(view(st, i));
    ++report.enumerated;
  });
  for (std::size_t i = 0; i < nshares; ++i) emit_rows(report, "{" + name(i) + "}", singles[i]);
  singles.clear();

  // One pair per pass keeps memory at one tally per secret.
  for (std::size_t i = 0; i < nshares; ++i) {
    for (std::size_t j = i + 1; j < nshares; ++j) {
      std::vector<Tally> joint(nsecrets, Tally(2 * bits));
      for_each_dealer([&](std::uint64_t s, const StaticDealerState& st) {
        joint[s].add(view(st, i) | (view(st, j) << bits));
      });
      emit_rows(report, "{" + name(i) + "," + name(j) + "}", joint);
    }
  }

  if (admit_odd) {
    const LeakReport leak = odd_point_leak_report(params);
    for (const auto& r : leak.rows) {
      report.rows.push_back({"{F(b" + std::to_string(r.point_i) + "),F(b" + std::to_string(r.point_j) + ")}", r.s0,
                             r.s1, r.distance});
    }
    report.scheme = "static3-all-points";
  }
  return report;
}

unsigned evolving_random_bits(const std::vector<unsigned>& generations, const GenerationLayout& layout, unsigned ell,
                              const EvolvingAuditOptions& options) {
  unsigned total = 0;
  for (const auto& v : plan_coins(generations, layout, ell, options)) total += v.bits;
  return total;
}

AuditReport audit_evolving(const GenerationLayout& layout, unsigned ell, const EvolvingAuditOptions& opt) {
  if (layout.is_paper()) throw RefusalError("evolving audits run on toy layouts only");
  if (ell < 1 || ell > 8) throw ParameterError("evolving audits need 1 <= ell <= 8");
  if (opt.inf_width < ell) throw ParameterError("inter-generation width must be at least ell");

  const BigUint population = layout.boundary(layout.max_generation());
  if (population > 64) throw RefusalError("toy layout has more than 64 participants");

  std::vector<std::pair<BigUint, BigUint>> pairs = opt.pairs;
  std::set<BigUint> named;
  if (pairs.empty()) {
    for (BigUint a = 1; a <= population; ++a) {
      for (BigUint b = a + 1; b <= population; ++b) pairs.emplace_back(a, b);
    }
    for (BigUint a = 1; a <= population; ++a) named.insert(a);
  } else {
    for (auto& [a, b] : pairs) {
      if (a == b) throw ParameterError("audited pairs need distinct participants");
      if (b < a) std::swap(a, b);
      named.insert(a);
      named.insert(b);
    }
  }

  std::map<std::vector<unsigned>, Group> groups;
  auto add_cell = [&](std::vector<BigUint> members) {
    std::vector<unsigned> gens;
    std::string label = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
      gens.push_back(layout.gen_of(members[i]));
      label += (i ? "," : "") + to_string(members[i]);
    }
    label += "}";
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    Group& g = groups[gens];
    g.generations = gens;
    g.cells.push_back({std::move(members), std::move(label)});
  };
  if (opt.singles) {
    for (const auto& t : named) add_cell({t});
  }
  for (const auto& [a, b] : pairs) add_cell({a, b});

  for (const auto& [gens, group] : groups) {
    const unsigned bits = evolving_random_bits(gens, layout, ell, opt);
    if (bits > opt.max_random_bits) {
      std::string which;
      for (unsigned g : gens) which += (which.empty() ? "" : ",") + std::to_string(g);
      throw RefusalError("generations {" + which + "} depend on " + std::to_string(bits) +
                         " random bits; exhaustive audit allows at most " + std::to_string(opt.max_random_bits));
    }
  }

  AuditReport report;
  report.scheme = opt.variant == Variant::revised ? "evolving" : "evolving-flawed";
  report.params = "ell=" + std::to_string(ell) + " layout=" + layout.describe() + " inf_width=" +
                  std::to_string(opt.inf_width) + (opt.marginalize ? " marginal" : " full");
  for (const auto& [gens, group] : groups) {
    if (opt.variant == Variant::revised) {
      run_group<EvolvingDealer>(report, group, layout, ell, opt);
    } else {
      run_group<FlawedDealer>(report, group, layout, ell, opt);
    }
  }
  return report;
}

AuditReport audit_inf_default(unsigned w) {
  if (w < 1 || w > 6) throw RefusalError("audit_inf_default enumerates 2^(3w) dealers; needs 1 <= w <= 6");
  const unsigned ngen = std::min((1u << w) - 1, 7u);
  const std::uint64_t n = std::uint64_t{1} << w;
  const BaseField field = BaseField::canonical(w);

  AuditReport report;
  report.scheme = "inf-default";
  report.params = "w=" + std::to_string(w) + " generations=1.." + std::to_string(ngen);

  std::vector<std::vector<Tally>> singles(ngen, std::vector<Tally>(n, Tally(w)));
  std::vector<std::vector<Tally>> pairs;
  std::vector<std::pair<unsigned, unsigned>> pair_gens;
  for (unsigned i = 1; i <= ngen; ++i) {
    for (unsigned j = i + 1; j <= ngen; ++j) {
      pairs.emplace_back(n, Tally(2 * w));
      pair_gens.emplace_back(i, j);
    }
  }
  std::vector<InfShare> shares(ngen);
  for (std::uint64_t s = 0; s < n; ++s) {
    for (std::uint64_t c1 = 0; c1 < n; ++c1) {
      for (std::uint64_t c2 = 0; c2 < n; ++c2) {
        const PolyInfScheme scheme({s, w}, w, field.elem(c1), field.elem(c2));
        for (unsigned g = 1; g <= ngen; ++g) {
          shares[g - 1] = scheme.share(g);
          singles[g - 1][s].add(shares[g - 1].value.bits);
        }
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          const auto [i, j] = pair_gens[p];
          pairs[p][s].add(shares[i - 1].value.bits | (shares[j - 1].value.bits << w));
        }
        for (unsigned i = 0; i < ngen; ++i) {
          for (unsigned j = i + 1; j < ngen; ++j) {
            for (unsigned k = j + 1; k < ngen; ++k) {
              ++report.checks;
              if (scheme.reconstruct({shares[i], shares[j], shares[k]}).bits != s) ++report.check_failures;
            }
          }
        }
        ++report.enumerated;
      }
    }
  }
  for (unsigned g = 1; g <= ngen; ++g) emit_rows(report, "{g" + std::to_string(g) + "}", singles[g - 1]);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    emit_rows(report, "{g" + std::to_string(pair_gens[p].first) + ",g" + std::to_string(pair_gens[p].second) + "}",
              pairs[p]);
  }
  return report;
}

std::string to_csv(const AuditReport& report, bool header) {
  std::ostringstream out;
  if (header) out << "scheme,params,set,s0,s1,distance_num,distance_den,verdict\n";
  for (const auto& r : report.rows) {
    out << report.scheme << ",\"" << report.params << "\",\"" << r.set << "\"," << r.s0 << ',' << r.s1 << ','
        << r.distance.num << ',' << r.distance.den << ',' << (r.distance.is_zero() ? "pass" : "fail") << '\n';
  }
  return out.str();
}

std::string to_text(const AuditReport& report) {
  std::ostringstream out;
  out << "scheme     " << report.scheme << '\n'
      << "params     " << report.params << '\n'
      << "enumerated " << report.enumerated << " dealers\n"
      << "cells      " << report.rows.size() << " (set, secret pair)\n";
  if (report.checks != 0) out << "checks     " << report.checks << " (" << report.check_failures << " failed)\n";
  out << "max dist   " << report.max_distance().str() << '\n';
  std::size_t shown = 0;
  for (const auto& r : report.rows) {
    if (r.distance.is_zero()) continue;
    if (shown++ == 20) {
      out << "  ...\n";
      break;
    }
    out << "  " << r.set << " s=" << r.s0 << "/" << r.s1 << " distance " << r.distance.str() << '\n';
  }
  out << "verdict    " << (report.pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace evss
