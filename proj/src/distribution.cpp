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

#include "evss/distribution.hpp"

#include <cstring>
#include <numeric>

#include "evss/errors.hpp"

namespace evss {
namespace {

std::string key_string(std::uint64_t key) {
  std::string s(8, '\0');
  std::memcpy(s.data(), &key, 8);
  return s;
}

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw ParameterError("rational with zero denominator");
  if (num == 0) return {0, 1};
  std::uint64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<unsigned __int128>(a.num) * b.den < static_cast<unsigned __int128>(b.num) * a.den;
}

Tally::Tally(unsigned key_bits) : key_bits_(key_bits), dense_(key_bits <= kDenseBits) {
  if (dense_) dense_counts_.assign(std::size_t{1} << key_bits, 0);
}

void Tally::add(std::uint64_t key) {
  ++total_;
  if (dense_) {
    ++dense_counts_[key];
  } else {
    ++sparse_counts_[key_string(key)];
  }
}

void Tally::add(const std::string& key) {
  if (dense_) throw ParameterError("byte-string keys need a sparse tally");
  ++total_;
  ++sparse_counts_[key];
}

std::uint64_t Tally::count_of(std::uint64_t key) const {
  if (dense_) return key < dense_counts_.size() ? dense_counts_[key] : 0;
  auto it = sparse_counts_.find(key_string(key));
  return it == sparse_counts_.end() ? 0 : it->second;
}

Rational Tally::probability(std::uint64_t key) const { return Rational::make(count_of(key), total_); }

Rational statistical_distance(const Tally& p, const Tally& q) {
  if (p.dense_ != q.dense_ || p.key_bits_ != q.key_bits_) throw ParameterError("tallies over different view spaces");
  if (p.total_ == 0 || q.total_ == 0) throw ParameterError("empty tally");
  // 1/2 * sum |cp/Np - cq/Nq| = sum |cp*Nq - cq*Np| / (2*Np*Nq)
  unsigned __int128 acc = 0;
  auto term = [&](std::uint64_t cp, std::uint64_t cq) {
    unsigned __int128 a = static_cast<unsigned __int128>(cp) * q.total_;
    unsigned __int128 b = static_cast<unsigned __int128>(cq) * p.total_;
    acc += a > b ? a - b : b - a;
  };
  if (p.dense_) {
    for (std::size_t k = 0; k < p.dense_counts_.size(); ++k) term(p.dense_counts_[k], q.dense_counts_[k]);
  } else {
    for (const auto& [key, cp] : p.sparse_counts_) {
      auto it = q.sparse_counts_.find(key);
      term(cp, it == q.sparse_counts_.end() ? 0 : it->second);
    }
    for (const auto& [key, cq] : q.sparse_counts_) {
      if (!p.sparse_counts_.contains(key)) term(0, cq);
    }
  }
  unsigned __int128 den = static_cast<unsigned __int128>(2) * p.total_ * q.total_;
  unsigned __int128 g = acc == 0 ? den : gcd128(acc, den);
  acc /= g;
  den /= g;
  if (den > UINT64_MAX) throw Error("statistical distance denominator overflow");
  return Rational::make(static_cast<std::uint64_t>(acc), static_cast<std::uint64_t>(den));
}

}  // namespace evss
