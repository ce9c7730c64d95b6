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
#include <exception>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evss/bigint.hpp"
#include "evss/gf_base.hpp"

// Operator commands behind the evss tool. Each command writes its report to
// `out` and throws an evss::Error on failure; exit_code_for maps the error.

namespace evss {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 2;
inline constexpr int parse = 3;
inline constexpr int capacity = 4;
inline constexpr int verification = 5;
}  // namespace exit_code

int exit_code_for(const std::exception& e);

/// ceil(ell/4) hex digits, optional 0x prefix; the value must fit in ell bits.
BaseElem parse_secret_hex(std::string_view hex, unsigned ell);
std::string secret_to_hex(const BaseElem& secret);
/// Comma-separated decimal values and inclusive ranges, e.g. "1,2,17-18".
std::vector<BigUint> parse_t_list(std::string_view spec);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
/// Writes to a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

std::string share_file_name(const BigUint& t);

struct SplitOptions {
  unsigned ell = 8;
  std::string secret_hex;
  std::string layout = "paper";
  std::string t_list;
  std::optional<std::string> seed_hex;
  std::filesystem::path out_dir = ".";
};
/// Returns the written paths.
std::vector<std::filesystem::path> cmd_split(const SplitOptions& opt, std::ostream& out);

/// Prints the secret as hex.
BaseElem cmd_join(const std::vector<std::filesystem::path>& files, std::ostream& out);

void cmd_info(const std::filesystem::path& file, bool csv, std::ostream& out);

struct SizesOptions {
  unsigned ell = 8;
  std::string layout = "paper";
  std::string t_list = "1,16,17,65536,65537";
  bool csv = false;
};
void cmd_sizes(const SizesOptions& opt, std::ostream& out);

struct AuditOptions {
  std::string scheme = "static";  // static | evolving | flawed | inf
  unsigned ell = 1;
  unsigned m = 2;
  std::string layout = "4,4";
  unsigned width = 4;             // inter-generation width (inf audits and evolving dealers)
  std::string pairs;              // "5:9,6:10"; empty = all
  bool admit_odd = false;
  bool csv = false;
};
/// Returns true iff the audit passed.
bool cmd_audit(const AuditOptions& opt, std::ostream& out);

struct AttackOptions {
  unsigned ell = 8;
  std::string layout = "paper";
  std::string t_low = "17";
  std::string t_high = "65537";
  std::optional<std::string> secret_hex;
  std::optional<std::string> seed_hex;
  unsigned trials = 1;
};
/// Returns true iff every trial recovered the dealer's secret.
bool cmd_attack_demo(const AttackOptions& opt, std::ostream& out);

}  // namespace evss
