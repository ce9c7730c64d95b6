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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 1). `--write-golden` regenerates the
// golden share files instead.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "evss/errors.hpp"
#include "evss/evolving.hpp"
#include "evss/flawed.hpp"
#include "evss/secrecy_lab.hpp"
#include "evss/share_file.hpp"
#include "evss/static3.hpp"

using namespace evss;

namespace {

using Clock = std::chrono::steady_clock;
using Bytes = std::vector<std::uint8_t>;

// Runtime limits in seconds, one per criterion.
constexpr double kLimit1 = 10;
constexpr double kLimit2 = 120;
constexpr double kLimit3 = 60;
constexpr double kLimit4 = 60;
constexpr double kLimit5 = 300;
constexpr double kLimit6 = 300;
constexpr double kLimit7 = 1;
constexpr double kLimit8 = 30;

constexpr unsigned kPaperEll = 8;
constexpr char kGoldenSeed[] = "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f";
constexpr std::uint64_t kGoldenSecret = 0xA7;
const std::array<unsigned, 6> kGoldenParticipants{1, 2, 3, 17, 18, 65537};

int failures = 0;

void report(const char* id, const std::string& title, bool ok, double seconds, double limit,
            const std::string& detail) {
  const bool in_time = seconds < limit;
  if (!(ok && in_time)) ++failures;
  std::printf("criterion %s: %s  %s  [%.2f s, limit %.0f s%s]\n", id, ok && in_time ? "PASS" : "FAIL", title.c_str(),
              seconds, limit, in_time ? "" : ", too slow");
  if (!detail.empty()) std::printf("%s", detail.c_str());
  std::fflush(stdout);
}

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

// ---- 1: conventional scheme correctness ------------------------------------

struct Tally {
  std::uint64_t cases = 0;
  std::uint64_t correct = 0;
  void add(bool ok) {
    ++cases;
    correct += ok ? 1 : 0;
  }
  bool all() const { return cases > 0 && cases == correct; }
  std::string str() const { return std::to_string(correct) + "/" + std::to_string(cases); }
};

// Every secret, every (a0, a1), every curve-share triple and every curve pair
// plus a2.
void exhaustive_static(unsigned ell, unsigned m, Tally& triples, Tally& pairs) {
  const StaticParams params = make_static_params(ell, m);
  const ExtField& F = params.ext();
  const std::uint64_t npoints = std::uint64_t{1} << (ell * m);
  const auto ncurve = static_cast<std::uint64_t>(params.curve_capacity());
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << ell); ++s) {
    const BaseElem secret = params.base().elem(s);
    for (std::uint64_t u = 0; u < npoints; ++u) {
      for (std::uint64_t v = 0; v < npoints; ++v) {
        const StaticDealerState st = static_split(secret, params, F.index_to_point(u), F.index_to_point(v));
        std::vector<CurveShare> shares;
        for (std::uint64_t i = 0; i < ncurve; ++i) shares.push_back(share_at(st, params, i));
        for (std::size_t i = 0; i < shares.size(); ++i) {
          for (std::size_t j = i + 1; j < shares.size(); ++j) {
            pairs.add(reconstruct_two_plus_f(shares[i], shares[j], st.a2, params) == secret);
            for (std::size_t k = j + 1; k < shares.size(); ++k) {
              triples.add(reconstruct_three(shares[i], shares[j], shares[k], params) == secret);
            }
          }
        }
      }
    }
  }
}

void criterion1() {
  const auto start = Clock::now();
  Tally t12, p12, t13, p13, t22, p22;
  exhaustive_static(1, 2, t12, p12);
  exhaustive_static(1, 3, t13, p13);
  exhaustive_static(2, 2, t22, p22);
  std::ostringstream d;
  d << "    ell=1 m=2: pairs+a2 " << p12.str() << ", triples " << t12.str() << " (two curve shares exist)\n"
    << "    ell=1 m=3: pairs+a2 " << p13.str() << ", triples " << t13.str() << "\n"
    << "    ell=2 m=2: pairs+a2 " << p22.str() << ", triples " << t22.str() << "\n";
  const bool ok = p12.all() && t12.correct == t12.cases && p13.all() && t13.all() && p22.all() && t22.all();
  report("1", "conventional scheme reconstructs exhaustively", ok, since(start), kLimit1, d.str());
}

// ---- 2: conventional scheme perfect secrecy ---------------------------------

void criterion2() {
  const auto start = Clock::now();
  std::ostringstream d;
  bool ok = true;
  for (unsigned ell : {1u, 2u}) {
    const AuditReport r = audit_static(make_static_params(ell, 2));
    ok = ok && r.pass() && !r.rows.empty();
    d << "    ell=" << ell << " m=2: " << r.rows.size() << " cells over " << r.enumerated
      << " dealers, max distance " << r.max_distance().str() << "\n";
  }
  report("2", "conventional scheme is perfectly secret (exact distances)", ok, since(start), kLimit2, d.str());
}

// ---- 3: odd-point counterexample -------------------------------------------

void criterion3() {
  const auto start = Clock::now();
  const StaticParams params = make_static_params(1, 2);
  const LeakReport leak = odd_point_leak_report(params);
  const AuditReport all_points = audit_static(params, true);
  const bool ok = Rational{} < leak.max_mixed_distance && leak.rule_exact() && leak.rule_transcripts > 0 &&
                  leak.rule_agreements == leak.rule_transcripts && !all_points.pass();
  std::ostringstream d;
  d << "    max mixed-parity distance " << leak.max_mixed_distance.str() << ", even-pair distance "
    << leak.max_even_distance.str() << "\n"
    << "    low-bit rule recovered s in " << leak.rule_agreements << "/" << leak.rule_transcripts << " transcripts\n";
  report("3", "odd evaluation points leak the secret", ok, since(start), kLimit3, d.str());
}

// ---- 4: revised evolving scheme, four reconstruction cases -----------------

void criterion4() {
  const auto start = Clock::now();
  constexpr int kDealers = 100;
  const std::array<std::array<unsigned, 3>, 4> triples{{{1, 2, 3}, {1, 2, 17}, {1, 17, 18}, {1, 17, 65537}}};
  std::array<Tally, 4> tallies;
  std::set<int> cases;
  ChaChaRandom secrets = ChaChaRandom::from_u64(4);
  for (int n = 0; n < kDealers; ++n) {
    const BaseElem secret{secrets.uint_bits(kPaperEll), kPaperEll};
    auto dealer = make_dealer(secret, GenerationLayout::paper(),
                              std::make_unique<ChaChaRandom>(ChaChaRandom::from_u64(1000 + n)));
    for (std::size_t i = 0; i < triples.size(); ++i) {
      const auto& tr = triples[i];
      const ShareBundle a = dealer.issue(tr[0]), b = dealer.issue(tr[1]), c = dealer.issue(tr[2]);
      cases.insert(static_cast<int>(classify(a.generation(), b.generation(), c.generation())));
      tallies[i].add(reconstruct(a, b, c) == secret);
    }
  }
  std::ostringstream d;
  bool ok = cases.size() == 4;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    ok = ok && tallies[i].all();
    d << "    (" << triples[i][0] << "," << triples[i][1] << "," << triples[i][2] << "): " << tallies[i].str() << "\n";
  }
  report("4", "revised evolving scheme reconstructs in all four cases (ell=8)", ok, since(start), kLimit4, d.str());
}

// ---- 5: revised evolving scheme secrecy at toy scale ------------------------

void criterion5() {
  const auto start = Clock::now();
  const AuditReport r = audit_evolving(GenerationLayout::toy({4, 4}), 1, EvolvingAuditOptions{});
  std::ostringstream d;
  d << "    layout (4,4) ell=1: " << r.rows.size() << " cells over " << r.enumerated << " dealers, max distance "
    << r.max_distance().str() << "\n";
  report("5", "revised evolving scheme leaks nothing to any pair (toy layout)", r.pass() && !r.rows.empty(),
         since(start), kLimit5, d.str());
}

// ---- 6: flawed scheme attack ------------------------------------------------

// Exhaustive over every coin the attack reads on layout (4,4,8), ell = 1:
// generation-2 coefficients, the first two masks and generation-3 a0. The
// remaining coins are drawn from a fixed generator, and the attacked pair
// (low in generation 2, high in generation 3) rotates with the transcript.
Tally exhaustive_toy_attack() {
  const auto layout = GenerationLayout::toy({4, 4, 8});
  constexpr unsigned kEll = 1;
  constexpr unsigned kInfWidth = 2;
  const unsigned m2 = flawed_inner_degree(2, kEll, layout);
  const unsigned m3 = flawed_inner_degree(3, kEll, layout);
  const auto mask_bits = static_cast<unsigned>(flawed_mask_bits(kEll, layout));
  const unsigned m1 = flawed_inner_degree(1, kEll, layout);
  const unsigned enumerated = 2 * m2 + 2 * mask_bits + m3;
  std::mt19937_64 filler(6);
  auto draw = [&](unsigned bits) { return filler() & ((std::uint64_t{1} << bits) - 1); };
  Tally tally;
  for (std::uint64_t s = 0; s < 2; ++s) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << enumerated); ++x) {
      std::uint64_t rest = x;
      auto take = [&](unsigned bits) {
        const std::uint64_t v = rest & ((std::uint64_t{1} << bits) - 1);
        rest >>= bits;
        return v;
      };
      auto coins = std::make_unique<AssignedCoins>();
      coins->set_inner(2, 0, take(m2));
      coins->set_inner(2, 1, take(m2));
      coins->set_mask(1, take(mask_bits));
      coins->set_mask(2, take(mask_bits));
      coins->set_inner(3, 0, take(m3));
      coins->set_inf(1, draw(kInfWidth));
      coins->set_inf(2, draw(kInfWidth));
      coins->set_inner(1, 0, draw(m1));
      coins->set_inner(1, 1, draw(m1));
      coins->set_inner(3, 1, draw(m3));
      coins->set_mask(3, draw(mask_bits));
      const BaseElem secret{s, kEll};
      FlawedDealer dealer(secret, layout, std::move(coins), kInfWidth);
      const unsigned low = 5 + static_cast<unsigned>(x % 4);
      const unsigned high = 9 + static_cast<unsigned>((x / 4) % 8);
      tally.add(two_party_attack(dealer.issue(low), dealer.issue(high)) == secret);
    }
  }
  return tally;
}

Tally paper_attack(int trials) {
  Tally tally;
  ChaChaRandom secrets = ChaChaRandom::from_u64(6);
  for (int n = 0; n < trials; ++n) {
    const BaseElem secret{secrets.uint_bits(kPaperEll), kPaperEll};
    FlawedDealer dealer(secret, GenerationLayout::paper(),
                        std::make_unique<StreamCoins>(std::make_unique<ChaChaRandom>(ChaChaRandom::from_u64(5000 + n))));
    tally.add(two_party_attack(dealer.issue(17), dealer.issue(65537)) == secret);
  }
  return tally;
}

Rational pair_distance(const AuditReport& r, const std::string& set) {
  Rational worst;
  for (const auto& row : r.rows) {
    if (row.set == set && worst < row.distance) worst = row.distance;
  }
  return worst;
}

void criterion6() {
  const auto start = Clock::now();
  const Tally toy = exhaustive_toy_attack();
  const Tally paper = paper_attack(1000);

  // The same pair shapes under both schemes. Layout (1,1,1): participants 2
  // and 3 are the only members of generations 2 and 3.
  EvolvingAuditOptions o;
  o.singles = false;
  o.pairs = {{2, 3}};
  const AuditReport revised_small = audit_evolving(GenerationLayout::toy({1, 1, 1}), 1, o);
  o.variant = Variant::flawed;
  const AuditReport flawed_small = audit_evolving(GenerationLayout::toy({1, 1, 1}), 1, o);
  EvolvingAuditOptions r448;
  r448.singles = false;
  r448.pairs = {{5, 9}};
  const AuditReport revised_448 = audit_evolving(GenerationLayout::toy({4, 4, 8}), 1, r448);

  const Rational flawed_leak = pair_distance(flawed_small, "{2,3}");
  const bool ok = toy.all() && paper.all() && revised_small.pass() && revised_448.pass() && Rational{} < flawed_leak;
  std::ostringstream d;
  d << "    attack, layout (4,4,8) ell=1, exhaustive: " << toy.str() << "\n"
    << "    attack, paper layout ell=8, pair (17,65537): " << paper.str() << "\n"
    << "    pair {2,3} on (1,1,1): revised distance " << revised_small.max_distance().str()
    << ", flawed distance " << flawed_leak.str() << "\n"
    << "    pair {5,9} on (4,4,8): revised distance " << revised_448.max_distance().str() << " over "
    << revised_448.enumerated << " dealers\n";
  report("6", "two participants break the flawed scheme but not the revised one", ok, since(start), kLimit6, d.str());
}

// ---- 7: share-size accounting ----------------------------------------------

void criterion7() {
  const auto start = Clock::now();
  const std::array<unsigned, 5> ts{1, 16, 17, 65536, 65537};
  const auto layout = GenerationLayout::paper();
  int identity = 0, bound_checked = 0, bound_held = 0, leading_checked = 0, leading_held = 0;
  std::string bound_misses;
  std::ostringstream d;
  for (unsigned t : ts) {
    const SizeReport r = size_report(t, kPaperEll, layout);
    identity += r.identity_holds ? 1 : 0;
    if (t > 2) {
      ++bound_checked;
      bound_held += r.within_bound ? 1 : 0;
      if (!r.within_bound) bound_misses += (bound_misses.empty() ? "" : ",") + std::to_string(t);
    }
    // Leading term: ell*m_g <= lg S(G^g) + ell + 1, checked exactly.
    bool leading = true;
    if (r.generation >= 2) {
      ++leading_checked;
      leading = pow2(r.ell * r.m - r.ell - 1) <= layout.gen_size(r.generation);
      leading_held += leading ? 1 : 0;
    }
    char line[200];
    std::snprintf(line, sizeof line,
                  "    t=%-6u g=%u m=%-2u total=%-4zu bound(lg t)=%-8.3f %-4s lg S=%-6.1f lead=%-3u %s\n", t,
                  r.generation, r.m, r.total_bits, r.bound(), r.within_bound ? "ok" : "over", r.lg_gen_size,
                  r.ell * r.m, r.generation >= 2 ? (leading ? "ok" : "over") : "(g=1)");
    d << line;
  }
  d << "    identity " << identity << "/" << ts.size() << ", lg t bound " << bound_held << "/" << bound_checked
    << (bound_misses.empty() ? "" : " (exceeded at t=" + bound_misses + ")") << ", leading term " << leading_held
    << "/" << leading_checked << "\n";
  const bool ok = identity == static_cast<int>(ts.size()) && bound_held == bound_checked &&
                  leading_held == leading_checked;
  report("7", "share sizes match the formula and the lg t bound", ok, since(start), kLimit7, d.str());
}

// ---- 8: format stability ----------------------------------------------------

std::vector<std::pair<std::string, Bytes>> golden_files() {
  auto dealer = make_dealer({kGoldenSecret, kPaperEll}, GenerationLayout::paper(),
                            std::make_unique<ChaChaRandom>(ChaChaRandom::from_hex(kGoldenSeed)));
  std::vector<std::pair<std::string, Bytes>> out;
  for (unsigned t : kGoldenParticipants) out.emplace_back("share-" + std::to_string(t) + ".evs", serialize(dealer.issue(t)));
  return out;
}

Bytes read_bytes(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void criterion8() {
  const auto start = Clock::now();
  const std::filesystem::path dir = EVSS_GOLDEN_DIR;
  int golden_ok = 0;
  const auto first = golden_files();
  const auto second = golden_files();
  for (std::size_t i = 0; i < first.size(); ++i) {
    const Bytes on_disk = read_bytes(dir / first[i].first);
    if (first[i].second == second[i].second && first[i].second == on_disk) ++golden_ok;
  }

  constexpr int kTrials = 10000;
  constexpr unsigned kEll[] = {1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 14, 16};
  const GenerationLayout layouts[] = {GenerationLayout::paper(), GenerationLayout::toy({4, 4, 8}),
                                      GenerationLayout::toy({1, 300, 70000})};
  ChaChaRandom rng = ChaChaRandom::from_u64(8);
  int round_trips = 0;
  for (int n = 0; n < kTrials; ++n) {
    const auto& layout = layouts[n % 3];
    const bool fourth_generation = layout.is_paper() && n % 100 == 0;  // needs the ell = 8 extension of degree 33
    const unsigned ell = fourth_generation ? kPaperEll : kEll[rng.uint_bits(8) % std::size(kEll)];
    auto dealer = make_dealer({rng.uint_bits(ell), ell}, layout, std::make_unique<ChaChaRandom>(ChaChaRandom::from_u64(n)));
    const BigUint cap = layout.is_paper() ? pow2(64) : layout.boundary(layout.max_generation());
    BigUint t = 1 + BigUint(rng.uint_bits(64)) % cap;
    if (fourth_generation) t = layout.boundary(3) + t;
    const ShareBundle b = dealer.issue(t);
    const Bytes f = serialize(b);
    if (parse_share(f) == b && serialize(parse_share(f)) == f) ++round_trips;
  }
  std::ostringstream d;
  d << "    golden files identical across runs and to " << dir.filename().string() << "/: " << golden_ok << "/"
    << first.size() << "\n"
    << "    parse/serialize round trips: " << round_trips << "/" << kTrials << "\n";
  const bool ok = golden_ok == static_cast<int>(first.size()) && round_trips == kTrials;
  report("8", "share files are stable and round-trip", ok, since(start), kLimit8, d.str());
}

int write_golden(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, bytes] : golden_files()) {
    std::ofstream out(dir / name, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    std::printf("wrote %s (%zu bytes)\n", (dir / name).c_str(), bytes.size());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::string(argv[1]) == "--write-golden") return write_golden(argv[2]);
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 1;
  }
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
