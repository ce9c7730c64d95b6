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

#include "evss/gf_base.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <utility>

#include "evss/errors.hpp"

namespace evss {
namespace f2poly {

unsigned degree(std::uint64_t p) { return p == 0 ? 0u : 63u - static_cast<unsigned>(std::countl_zero(p)); }

std::uint64_t mod(unsigned __int128 a, std::uint64_t m) {
  const int dm = static_cast<int>(degree(m));
  auto hi = static_cast<std::uint64_t>(a >> 64);
  auto lo = static_cast<std::uint64_t>(a);
  int top = hi != 0 ? 127 - std::countl_zero(hi) : (lo != 0 ? 63 - std::countl_zero(lo) : -1);
  for (int bit = top; bit >= dm; --bit) {
    if ((a >> bit) & 1u) a ^= static_cast<unsigned __int128>(m) << (bit - dm);
  }
  return static_cast<std::uint64_t>(a);
}

namespace {

unsigned __int128 clmul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = 0;
  while (b != 0) {
    int k = std::countr_zero(b);
    r ^= static_cast<unsigned __int128>(a) << k;
    b &= b - 1;
  }
  return r;
}

}  // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return mod(clmul(a, b), m); }

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t r = mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

bool is_irreducible(std::uint64_t p) {
  const unsigned n = degree(p);
  if (p == 0 || n == 0) return false;
  std::uint64_t h = 2;  // x
  for (unsigned k = 1; k <= n / 2; ++k) {
    h = mulmod(h, h, p);
    if (gcd(p, h ^ mod(2, p)) != 1) return false;
  }
  return true;
}

}  // namespace f2poly

BaseElem base_add(const BaseElem& a, const BaseElem& b) {
  if (a.ell != b.ell) throw ParameterError("base_add: operands from fields of different degree");
  return {a.bits ^ b.bits, a.ell};
}

struct BaseField::Tables {
  std::vector<std::uint8_t> product;  // ell <= 8: product[(a << ell) | b]
  std::vector<std::uint32_t> log;     // 9 <= ell <= 16
  std::vector<std::uint16_t> exp;     // doubled so log[a] + log[b] needs no reduction
};

namespace {

constexpr unsigned kMaxProductTableDegree = 8;
constexpr unsigned kMaxLogTableDegree = 16;

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t modulus) {
  std::uint64_t r = 1;
  while (e != 0) {
    if (e & 1) r = f2poly::mulmod(r, a, modulus);
    a = f2poly::mulmod(a, a, modulus);
    e >>= 1;
  }
  return r;
}

// Generator of the multiplicative group of F2[x]/modulus.
std::uint64_t find_generator(std::uint64_t modulus, unsigned ell) {
  const std::uint64_t order = (std::uint64_t{1} << ell) - 1;
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = order;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    primes.push_back(p);
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) primes.push_back(rest);
  for (std::uint64_t g = 2; g <= order; ++g) {
    bool generates = true;
    for (std::uint64_t p : primes) {
      if (pow_mod(g, order / p, modulus) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  return 1;  // order == 1: the field has no nonzero element besides 1
}

}  // namespace

std::shared_ptr<const BaseField::Tables> BaseField::make_tables(std::uint64_t modulus, unsigned ell) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::shared_ptr<const Tables>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(modulus); it != cache.end()) return it->second;
  auto t = std::make_shared<Tables>();
  const std::uint64_t n = std::uint64_t{1} << ell;
  if (ell <= kMaxProductTableDegree) {
    t->product.resize(n * n);
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t b = 0; b < n; ++b) {
        t->product[(a << ell) | b] = static_cast<std::uint8_t>(f2poly::mulmod(a, b, modulus));
      }
    }
  } else {
    const std::uint64_t g = find_generator(modulus, ell);
    t->log.resize(n);
    t->exp.resize(2 * (n - 1));
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k < n - 1; ++k) {
      t->exp[k] = t->exp[k + n - 1] = static_cast<std::uint16_t>(x);
      t->log[x] = static_cast<std::uint32_t>(k);
      x = f2poly::mulmod(x, g, modulus);
    }
  }
  return cache.emplace(modulus, std::move(t)).first->second;
}

BaseField::BaseField(BasePolyModulus modulus) : modulus_(modulus) {
  if (modulus.ell < 1 || modulus.ell > kMaxBaseDegree) {
    throw ParameterError("base field degree must be in [1, 63]");
  }
  if (f2poly::degree(modulus.coeffs) != modulus.ell) {
    throw ParameterError("base modulus is not monic of the stated degree");
  }
  mask_ = (std::uint64_t{1} << modulus.ell) - 1;
  if (modulus.ell <= kMaxLogTableDegree) tables_ = make_tables(modulus.coeffs, modulus.ell);
}

BaseField BaseField::canonical(unsigned ell) {
  static std::mutex mu;
  static std::map<unsigned, BaseField> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(ell); it != cache.end()) return it->second;
  }
  BaseField field(find_irreducible_base(ell));
  std::lock_guard lock(mu);
  return cache.emplace(ell, std::move(field)).first->second;
}

BaseElem BaseField::elem(std::uint64_t bits) const {
  if (bits & ~mask_) throw ParameterError("value does not fit in the base field");
  return {bits, ell()};
}

void BaseField::check(const BaseElem& a) const {
  if (a.ell != ell()) throw ParameterError("element belongs to a base field of different degree");
}

BaseElem BaseField::add(const BaseElem& a, const BaseElem& b) const {
  check(a);
  check(b);
  return {a.bits ^ b.bits, ell()};
}

std::uint64_t BaseField::mul_raw(std::uint64_t a, std::uint64_t b) const {
  if (tables_) {
    if (!tables_->product.empty()) return tables_->product[(a << modulus_.ell) | b];
    if (a == 0 || b == 0) return 0;
    return tables_->exp[tables_->log[a] + tables_->log[b]];
  }
  return f2poly::mulmod(a, b, modulus_.coeffs);
}

BaseElem BaseField::mul(const BaseElem& a, const BaseElem& b) const {
  check(a);
  check(b);
  return {mul_raw(a.bits, b.bits), ell()};
}

std::uint64_t BaseField::inv_raw(std::uint64_t a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in the base field");
  // Invariant: g1 * a = u and g2 * a = v (mod g).
  std::uint64_t u = a, v = modulus_.coeffs;
  std::uint64_t g1 = 1, g2 = 0;
  while (u != 1) {
    if (u == 0) throw ParameterError("base modulus is reducible");
    int j = static_cast<int>(f2poly::degree(u)) - static_cast<int>(f2poly::degree(v));
    if (j < 0) {
      std::swap(u, v);
      std::swap(g1, g2);
      j = -j;
    }
    u ^= v << j;
    g1 ^= g2 << j;
  }
  return f2poly::mod(g1, modulus_.coeffs);
}

BaseElem BaseField::inv(const BaseElem& a) const {
  check(a);
  return {inv_raw(a.bits), ell()};
}

BasePolyModulus find_irreducible_base(unsigned ell) {
  if (ell < 1 || ell > kMaxBaseDegree) throw ParameterError("base field degree must be in [1, 63]");
  static std::mutex mu;
  static std::map<unsigned, BasePolyModulus> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(ell); it != cache.end()) return it->second;
  const std::uint64_t top = std::uint64_t{1} << ell;
  for (std::uint64_t low = 0; low < top; ++low) {
    std::uint64_t p = top | low;
    if (f2poly::is_irreducible(p)) {
      BasePolyModulus g{ell, p};
      cache.emplace(ell, g);
      return g;
    }
  }
  throw Error("no irreducible polynomial found");  // unreachable
}

std::string to_string(const BasePolyModulus& g) {
  std::string out;
  for (int k = static_cast<int>(g.ell); k >= 0; --k) {
    if (!((g.coeffs >> k) & 1u)) continue;
    if (!out.empty()) out += "+";
    if (k == 0) {
      out += "1";
    } else if (k == 1) {
      out += "x";
    } else {
      out += "x^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace evss
