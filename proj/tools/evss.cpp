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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "evss/commands.hpp"
#include "evss/errors.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"Evolving 3-threshold secret sharing"};
  app.require_subcommand(1);

  evss::SplitOptions split;
  auto* split_cmd = app.add_subcommand("split", "Deal shares for participants t");
  split_cmd->add_option("--ell", split.ell, "Secret length in bits")->required();
  split_cmd->add_option("--secret", split.secret_hex, "Secret as hex")->required();
  split_cmd->add_option("--t", split.t_list, "Participants, e.g. 1,2,17-18")->required();
  split_cmd->add_option("--layout", split.layout, "paper, or toy sizes like 4,4,8");
  split_cmd->add_option("--seed", split.seed_hex, "64 hex digits; deterministic output for fixtures");
  split_cmd->add_option("--out", split.out_dir, "Output directory");

  std::vector<std::string> join_files;
  auto* join_cmd = app.add_subcommand("join", "Recover the secret from three share files");
  join_cmd->add_option("files", join_files, "Three share files")->required()->expected(3);

  std::string info_file;
  bool info_csv = false;
  auto* info_cmd = app.add_subcommand("info", "Describe a share file");
  info_cmd->add_option("file", info_file)->required();
  info_cmd->add_flag("--csv", info_csv);

  evss::SizesOptions sizes;
  auto* sizes_cmd = app.add_subcommand("sizes", "Share-size table");
  sizes_cmd->add_option("--ell", sizes.ell);
  sizes_cmd->add_option("--t", sizes.t_list);
  sizes_cmd->add_option("--layout", sizes.layout);
  sizes_cmd->add_flag("--csv", sizes.csv);

  evss::AuditOptions audit;
  auto* audit_cmd = app.add_subcommand("audit", "Exhaustive secrecy audit");
  audit_cmd->add_option("--scheme", audit.scheme, "static, evolving, flawed or inf");
  audit_cmd->add_option("--ell", audit.ell);
  audit_cmd->add_option("--m", audit.m, "Extension degree (static)");
  audit_cmd->add_option("--layout", audit.layout, "Toy sizes (evolving, flawed)");
  audit_cmd->add_option("--width", audit.width, "Inter-generation width");
  audit_cmd->add_option("--pairs", audit.pairs, "Participant pairs a:b,... (default all)");
  audit_cmd->add_flag("--odd", audit.admit_odd, "Admit odd evaluation points (static)");
  audit_cmd->add_flag("--csv", audit.csv);

  evss::AttackOptions attack;
  auto* attack_cmd = app.add_subcommand("attack-demo", "Two-colluder attack on the flawed variant");
  attack_cmd->add_option("--ell", attack.ell);
  attack_cmd->add_option("--layout", attack.layout);
  attack_cmd->add_option("--low", attack.t_low, "Colluder in the lower generation");
  attack_cmd->add_option("--high", attack.t_high, "Colluder in the higher generation");
  attack_cmd->add_option("--secret", attack.secret_hex);
  attack_cmd->add_option("--seed", attack.seed_hex);
  attack_cmd->add_option("--trials", attack.trials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : evss::exit_code::usage;
  }

  try {
    if (*split_cmd) {
      if (split.seed_hex) std::cerr << "note: seeded mode, output is reproducible and unfit for real secrets\n";
      evss::cmd_split(split, std::cout);
    } else if (*join_cmd) {
      evss::cmd_join({join_files.begin(), join_files.end()}, std::cout);
    } else if (*info_cmd) {
      evss::cmd_info(info_file, info_csv, std::cout);
    } else if (*sizes_cmd) {
      evss::cmd_sizes(sizes, std::cout);
    } else if (*audit_cmd) {
      if (!evss::cmd_audit(audit, std::cout)) return evss::exit_code::verification;
    } else if (*attack_cmd) {
      if (!evss::cmd_attack_demo(attack, std::cout)) return evss::exit_code::verification;
    }
  } catch (const std::exception& e) {
    std::cerr << "evss: " << e.what() << '\n';
    return evss::exit_code_for(e);
  }
  return evss::exit_code::ok;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
