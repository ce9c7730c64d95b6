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

#include "evss/commands.hpp"

#include <fstream>
#include <iomanip>
#include <iterator>
#include <memory>
#include <ostream>
#include <sstream>

#include <unistd.h>

#include "evss/errors.hpp"
#include "evss/evolving.hpp"
#include "evss/flawed.hpp"
#include "evss/random.hpp"
#include "evss/secrecy_lab.hpp"
#include "evss/share_file.hpp"

namespace evss {
namespace {

constexpr std::size_t kMaxSplitCount = 100000;

std::unique_ptr<RandomSource> make_source(const std::optional<std::string>& seed_hex) {
  if (seed_hex) return std::make_unique<ChaChaRandom>(ChaChaRandom::from_hex(*seed_hex));
  return std::make_unique<SystemRandom>();
}

BigUint parse_decimal(std::string_view s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ParameterError("expected a decimal number, got '" + std::string(s) + "'");
  }
  return BigUint(std::string(s));
}

std::string fixed(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << v;
  return s.str();
}

void print_size_row(std::ostream& out, const SizeReport& r, bool csv) {
  if (csv) {
    out << r.t << ',' << r.generation << ',' << r.index_in_gen << ',' << r.m << ',' << r.p1_bits << ',' << r.p2_bits
        << ',' << r.p3_bits << ',' << r.p4_bits << ',' << r.p5_bits << ',' << r.total_bits << ',' << fixed(r.bound())
        << ',' << (r.within_bound ? "yes" : "no") << ','
        << fixed(r.lg_gen_size + static_cast<double>(r.bound_offset)) << ','
        << (r.within_bound_gen_size ? "yes" : "no") << '\n';
    return;
  }
  out << std::setw(22) << to_string(r.t) << std::setw(4) << r.generation << std::setw(22) << to_string(r.index_in_gen)
      << std::setw(4) << r.m << std::setw(5) << r.p1_bits << std::setw(5) << r.p2_bits << std::setw(6) << r.p3_bits
      << std::setw(5) << r.p4_bits << std::setw(4) << r.p5_bits << std::setw(7) << r.total_bits << std::setw(10)
      << fixed(r.bound()) << std::setw(4) << (r.within_bound ? "ok" : "!!") << std::setw(10)
      << fixed(r.lg_gen_size + static_cast<double>(r.bound_offset)) << std::setw(4)
      << (r.within_bound_gen_size ? "ok" : "!!") << '\n';
}

void print_size_header(std::ostream& out, bool csv) {
  if (csv) {
    out << "t,g,h,m,p1,p2,p3,p4,p5,total,bound_lg_t,within,bound_lg_s,within_s\n";
    return;
  }
  out << std::setw(22) << "t" << std::setw(4) << "g" << std::setw(22) << "h" << std::setw(4) << "m" << std::setw(5)
      << "P1" << std::setw(5) << "P2" << std::setw(6) << "P3" << std::setw(5) << "P4" << std::setw(4) << "P5"
      << std::setw(7) << "total" << std::setw(14) << "bound(lg t)" << std::setw(14) << "bound(lg S)" << '\n';
}

std::vector<std::pair<BigUint, BigUint>> parse_pairs(std::string_view spec) {
  std::vector<std::pair<BigUint, BigUint>> pairs;
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw ParameterError("pairs are written as a:b");
    pairs.emplace_back(parse_decimal(item.substr(0, colon)), parse_decimal(item.substr(colon + 1)));
    if (comma == std::string_view::npos) break;
    spec.remove_prefix(comma + 1);
  }
  return pairs;
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return exit_code::parse;
  if (dynamic_cast<const CapacityError*>(&e)) return exit_code::capacity;
  if (dynamic_cast<const VerificationError*>(&e)) return exit_code::verification;
  if (dynamic_cast<const ParameterError*>(&e) || dynamic_cast<const RefusalError*>(&e)) return exit_code::usage;
  return 1;
}

BaseElem parse_secret_hex(std::string_view hex, unsigned ell) {
  if (ell < 1 || ell > kMaxBaseDegree) throw ParameterError("ell must be in [1, 63]");
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  const std::size_t digits = (ell + 3) / 4;
  if (hex.size() != digits) {
    throw ParameterError("secret must have " + std::to_string(digits) + " hex digits for ell=" + std::to_string(ell));
  }
  std::uint64_t v = 0;
  for (char c : hex) {
    int d;
    if (c >= '0' && c <= '9') {
      d = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      d = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      d = c - 'A' + 10;
    } else {
      throw ParameterError("secret is not hexadecimal");
    }
    v = (v << 4) | static_cast<unsigned>(d);
  }
  if (ell < 64 && (v >> ell) != 0) throw ParameterError("secret does not fit in ell=" + std::to_string(ell) + " bits");
  return {v, ell};
}

std::string secret_to_hex(const BaseElem& secret) {
  std::ostringstream s;
  s << std::hex << std::setfill('0') << std::setw(static_cast<int>((secret.ell + 3) / 4)) << secret.bits;
  return s.str();
}

std::vector<BigUint> parse_t_list(std::string_view spec) {
  std::vector<BigUint> ts;
  if (spec.empty()) throw ParameterError("empty participant list");
  while (true) {
    const auto comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      ts.push_back(parse_decimal(item));
    } else {
      const BigUint lo = parse_decimal(item.substr(0, dash));
      const BigUint hi = parse_decimal(item.substr(dash + 1));
      if (hi < lo) throw ParameterError("empty participant range");
      if (hi - lo >= kMaxSplitCount) throw ParameterError("participant range too long");
      for (BigUint t = lo; t <= hi; ++t) ts.push_back(t);
    }
    if (ts.size() > kMaxSplitCount) throw ParameterError("too many participants in one call");
    if (comma == std::string_view::npos) break;
    spec.remove_prefix(comma + 1);
  }
  for (const auto& t : ts) {
    if (t < 1) throw ParameterError("participant indices start at 1");
  }
  return ts;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot create " + tmp.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp);
      throw Error("cannot write " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

std::string share_file_name(const BigUint& t) { return "share-" + to_string(t) + ".evs"; }

std::vector<std::filesystem::path> cmd_split(const SplitOptions& opt, std::ostream& out) {
  const BaseElem secret = parse_secret_hex(opt.secret_hex, opt.ell);
  GenerationLayout layout = GenerationLayout::parse(opt.layout);
  const std::vector<BigUint> ts = parse_t_list(opt.t_list);
  for (const auto& t : ts) layout.gen_of(t);  // capacity check before any output

  EvolvingDealer dealer = make_dealer(secret, std::move(layout), make_source(opt.seed_hex));
  std::filesystem::create_directories(opt.out_dir);
  std::vector<std::filesystem::path> written;
  for (const auto& t : ts) {
    const auto bytes = serialize(dealer.issue(t));
    auto path = opt.out_dir / share_file_name(t);
    write_file_atomic(path, bytes);
    out << path.string() << '\n';
    written.push_back(std::move(path));
  }
  return written;
}

BaseElem cmd_join(const std::vector<std::filesystem::path>& files, std::ostream& out) {
  if (files.size() != 3) throw ParameterError("join needs exactly three share files");
  std::vector<ShareBundle> b;
  for (const auto& f : files) b.push_back(parse_share(read_file(f)));
  const BaseElem secret = reconstruct(b[0], b[1], b[2]);
  out << secret_to_hex(secret) << '\n';
  return secret;
}

void cmd_info(const std::filesystem::path& file, bool csv, std::ostream& out) {
  const ShareBundle b = parse_share(read_file(file));
  const SizeReport r = bundle_size_bits(b);
  if (csv) {
    print_size_header(out, true);
    print_size_row(out, r, true);
    return;
  }
  out << "t          " << r.t << '\n'
      << "generation " << r.generation << '\n'
      << "h          " << r.index_in_gen << '\n'
      << "ell        " << r.ell << '\n'
      << "layout     " << b.layout.describe() << '\n'
      << "m          " << r.m << '\n'
      << "P1 bits    " << r.p1_bits << '\n'
      << "P2 bits    " << r.p2_bits << '\n'
      << "P3 bits    " << r.p3_bits << '\n'
      << "P4 bits    " << r.p4_bits << '\n'
      << "P5 bits    " << r.p5_bits << '\n'
      << "total      " << r.total_bits << '\n'
      << "bound      " << fixed(r.bound()) << " (lg t + " << r.bound_offset << ")"
      << (r.within_bound ? "" : "  exceeded") << '\n';
}

void cmd_sizes(const SizesOptions& opt, std::ostream& out) {
  const GenerationLayout layout = GenerationLayout::parse(opt.layout);
  const std::vector<BigUint> ts = parse_t_list(opt.t_list);
  print_size_header(out, opt.csv);
  for (const auto& t : ts) print_size_row(out, size_report(t, opt.ell, layout), opt.csv);
}

bool cmd_audit(const AuditOptions& opt, std::ostream& out) {
  AuditReport report;
  if (opt.scheme == "static") {
    report = audit_static(make_static_params(opt.ell, opt.m, ParamMode::audit), opt.admit_odd);
  } else if (opt.scheme == "evolving" || opt.scheme == "flawed") {
    EvolvingAuditOptions eo;
    eo.variant = opt.scheme == "evolving" ? Variant::revised : Variant::flawed;
    eo.inf_width = opt.width;
    eo.pairs = parse_pairs(opt.pairs);
    report = audit_evolving(GenerationLayout::parse(opt.layout), opt.ell, eo);
  } else if (opt.scheme == "inf") {
    report = audit_inf_default(opt.width);
  } else {
    throw ParameterError("unknown audit scheme '" + opt.scheme + "' (static, evolving, flawed, inf)");
  }
  out << (opt.csv ? to_csv(report) : to_text(report));
  return report.pass();
}

bool cmd_attack_demo(const AttackOptions& opt, std::ostream& out) {
  const GenerationLayout layout = GenerationLayout::parse(opt.layout);
  const BigUint t_low = parse_decimal(opt.t_low);
  const BigUint t_high = parse_decimal(opt.t_high);
  if (opt.trials == 0) throw ParameterError("at least one trial");
  auto rng = make_source(opt.seed_hex);
  const BaseField field = BaseField::canonical(opt.ell);
  const std::optional<BaseElem> fixed_secret =
      opt.secret_hex ? std::optional<BaseElem>(parse_secret_hex(*opt.secret_hex, opt.ell)) : std::nullopt;

  out << "layout " << layout.describe() << ", ell=" << opt.ell << ", colluders t=" << t_low << " (g="
      << layout.gen_of(t_low) << ") and t=" << t_high << " (g=" << layout.gen_of(t_high) << ")\n";
  std::size_t recovered = 0;
  for (unsigned trial = 0; trial < opt.trials; ++trial) {
    const BaseElem secret = fixed_secret ? *fixed_secret : field.elem(rng->uint_bits(opt.ell));
    ChaChaRandom::Seed dealer_seed;
    rng->fill(dealer_seed);
    FlawedDealer dealer(secret, layout,
                        std::make_unique<StreamCoins>(std::make_unique<ChaChaRandom>(dealer_seed)));
    const BaseElem guess = two_party_attack(dealer.issue(t_low), dealer.issue(t_high));
    const bool ok = guess == secret;
    recovered += ok;
    if (opt.trials <= 20) {
      out << "trial " << trial << ": secret " << secret_to_hex(secret) << "  recovered " << secret_to_hex(guess)
          << (ok ? "  match" : "  MISMATCH") << '\n';
    }
  }
  out << "recovered " << recovered << " / " << opt.trials << '\n';
  return recovered == opt.trials;
}

}  // namespace evss
