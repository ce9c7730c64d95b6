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

#include "evss/gf_ext.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "evss/errors.hpp"

namespace evss {
namespace {

// Polynomials over GF(2^ell) as coefficient words, lowest degree first,
// trimmed so the last entry is nonzero (empty = 0).
using Poly = std::vector<std::uint64_t>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

// r <- r mod f for monic f. Moduli are usually sparse, so only the nonzero
// lower coefficients of f are visited.
void reduce_monic(Poly& r, const Poly& f, const BaseField& F) {
  const int df = deg(f);
  int terms[64];
  int nterms = 0;
  bool sparse = true;
  for (int i = 0; i < df && sparse; ++i) {
    if (f[i] == 0) continue;
    if (nterms == 64) {
      sparse = false;
    } else {
      terms[nterms++] = i;
    }
  }
  for (int d = deg(r); d >= df; --d) {
    std::uint64_t c = r[d];
    if (c == 0) continue;
    if (sparse) {
      for (int k = 0; k < nterms; ++k) r[d - df + terms[k]] ^= F.mul_raw(c, f[terms[k]]);
    } else {
      for (int i = 0; i < df; ++i) r[d - df + i] ^= F.mul_raw(c, f[i]);
    }
    r[d] = 0;
  }
  trim(r);
}

// Remainder of a by arbitrary nonzero b.
Poly mod_poly(Poly a, const Poly& b, const BaseField& F) {
  const int db = deg(b);
  const std::uint64_t lead_inv = F.inv_raw(b.back());
  for (int d = deg(a); d >= db; --d) {
    std::uint64_t c = a[d];
    if (c == 0) continue;
    c = F.mul_raw(c, lead_inv);
    for (int i = 0; i <= db; ++i) a[d - db + i] ^= F.mul_raw(c, b[i]);
  }
  trim(a);
  return a;
}

Poly gcd_poly(Poly a, Poly b, const BaseField& F) {
  while (!b.empty()) {
    Poly r = mod_poly(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Squaring is additive in characteristic 2: (sum c_k y^k)^2 = sum c_k^2 y^(2k).
Poly square_poly(const Poly& a, const BaseField& F) {
  if (a.empty()) return {};
  Poly r(2 * a.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[2 * i] = F.mul_raw(a[i], a[i]);
  return r;
}

Poly to_poly(const ExtPolyModulus& g) {
  Poly p;
  for (const auto& c : g.coeffs) p.push_back(c.bits);
  trim(p);
  return p;
}

}  // namespace

bool ExtElem::is_zero() const {
  for (auto c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

BaseElem proj_const(const ExtElem& beta) {
  if (beta.coeffs.empty()) throw ParameterError("proj_const of an empty extension element");
  return {beta.coeffs[0], beta.ell};
}

bool is_irreducible_ext(const ExtPolyModulus& g, const BaseField& base) {
  const Poly f = to_poly(g);
  const int m = deg(f);
  if (m < 1 || f.back() != 1) return false;
  if (m == 1) return true;
  const Poly y{0, 1};
  Poly h = y;
  for (int k = 1; k <= m / 2; ++k) {
    // h <- h^q with q = 2^ell (ell squarings).
    for (unsigned s = 0; s < base.ell(); ++s) {
      h = square_poly(h, base);
      reduce_monic(h, f, base);
    }
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] ^= 1;
    trim(diff);
    if (diff.empty()) return false;  // y^(q^k) = y mod f: f has a factor of degree dividing k
    Poly d = gcd_poly(f, diff, base);
    if (deg(d) > 0) return false;
  }
  return true;
}

ExtPolyModulus find_irreducible_ext(unsigned m, const BasePolyModulus& base_modulus) {
  if (m < 1) throw ParameterError("extension degree must be at least 1");
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, ExtPolyModulus> cache;
  std::lock_guard lock(mu);
  const auto key = std::make_pair(base_modulus.coeffs, m);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const BaseField base(base_modulus);
  const unsigned ell = base.ell();
  const std::uint64_t mask = base.order_mask();
  // Candidate counter v enumerates (c_{m-1}, ..., c_0) with c_{m-1} most
  // significant; c_k = bits [k*ell, (k+1)*ell) of v.
  for (BigUint v = 0;; ++v) {
    ExtPolyModulus g;
    g.m = m;
    BigUint rest = v;
    for (unsigned k = 0; k < m; ++k) {
      g.coeffs.push_back({static_cast<std::uint64_t>(rest & mask), ell});
      rest >>= ell;
    }
    if (rest != 0) throw Error("irreducible search exhausted");  // unreachable
    g.coeffs.push_back(base.one());
    if (is_irreducible_ext(g, base)) {
      cache.emplace(key, g);
      return g;
    }
  }
}

ExtField::ExtField(BaseField base, ExtPolyModulus modulus) : base_(std::move(base)), modulus_(std::move(modulus)) {
  if (modulus_.m < 1 || modulus_.coeffs.size() != modulus_.m + 1) {
    throw ParameterError("extension modulus has inconsistent degree");
  }
  for (const auto& c : modulus_.coeffs) base_.check(c);
  if (modulus_.coeffs.back().bits != 1) throw ParameterError("extension modulus is not monic");
}

std::shared_ptr<const ExtField> ExtField::canonical(unsigned ell, unsigned m) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const ExtField>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({ell, m}); it != cache.end()) return it->second;
  }
  auto base_mod = find_irreducible_base(ell);
  auto field = std::make_shared<const ExtField>(BaseField(base_mod), find_irreducible_ext(m, base_mod));
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(ell, m), std::move(field)).first->second;
}

void ExtField::check(const ExtElem& a) const {
  if (a.ell != ell() || a.coeffs.size() != m()) {
    throw ParameterError("element belongs to a different extension field");
  }
}

ExtElem ExtField::one() const {
  ExtElem r = zero();
  r.coeffs[0] = 1;
  return r;
}

ExtElem ExtField::add(const ExtElem& a, const ExtElem& b) const {
  check(a);
  check(b);
  ExtElem r = a;
  for (unsigned k = 0; k < m(); ++k) r.coeffs[k] ^= b.coeffs[k];
  return r;
}

ExtElem ExtField::mul(const ExtElem& a, const ExtElem& b) const {
  check(a);
  check(b);
  const unsigned n = m();
  std::vector<std::uint64_t> prod(2 * n - 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j) prod[i + j] ^= base_.mul_raw(a.coeffs[i], b.coeffs[j]);
  }
  for (unsigned d = 2 * n - 2; d >= n; --d) {
    std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (unsigned i = 0; i < n; ++i) prod[d - n + i] ^= base_.mul_raw(c, modulus_.coeffs[i].bits);
  }
  prod.resize(n);
  return {ell(), std::move(prod)};
}

ExtElem ExtField::inv(const ExtElem& a) const {
  check(a);
  if (a.is_zero()) throw DivisionByZero("inverse of zero in the extension field");
  Poly u(a.coeffs.begin(), a.coeffs.end());
  trim(u);
  Poly v = to_poly(modulus_);
  Poly g1{1}, g2{};
  // Invariant: g1 * a = u and g2 * a = v (mod g1(y)).
  while (deg(u) > 0) {
    int j = deg(u) - deg(v);
    if (j < 0) {
      std::swap(u, v);
      std::swap(g1, g2);
      j = -j;
    }
    const std::uint64_t c = base_.mul_raw(u.back(), base_.inv_raw(v.back()));
    for (int i = 0; i <= deg(v); ++i) u[i + j] ^= base_.mul_raw(c, v[i]);
    if (g1.size() < g2.size() + j) g1.resize(g2.size() + j, 0);
    for (int i = 0; i <= deg(g2); ++i) g1[i + j] ^= base_.mul_raw(c, g2[i]);
    trim(u);
    trim(g1);
    if (u.empty()) throw ParameterError("extension modulus is reducible");
  }
  const std::uint64_t u0_inv = base_.inv_raw(u[0]);
  Poly r;
  for (auto c : g1) r.push_back(base_.mul_raw(c, u0_inv));
  reduce_monic(r, to_poly(modulus_), base_);
  r.resize(m(), 0);
  return {ell(), std::move(r)};
}

ExtElem ExtField::scale(const BaseElem& c, const ExtElem& a) const {
  base_.check(c);
  check(a);
  ExtElem r = a;
  for (auto& x : r.coeffs) x = base_.mul_raw(c.bits, x);
  return r;
}

ExtElem ExtField::embed(const BaseElem& alpha) const {
  base_.check(alpha);
  ExtElem r = zero();
  r.coeffs[0] = alpha.bits;
  return r;
}

bool ExtField::in_base_subfield(const ExtElem& a) const {
  check(a);
  for (unsigned k = 1; k < m(); ++k) {
    if (a.coeffs[k] != 0) return false;
  }
  return true;
}

ExtElem ExtField::index_to_point(const BigUint& j) const {
  if (j < 0 || bit_length(j) > total_bits()) throw ParameterError("point index out of range for the extension field");
  ExtElem r = zero();
  const std::uint64_t mask = base_.order_mask();
  if (total_bits() <= 64) {
    auto word = static_cast<std::uint64_t>(j);
    for (unsigned k = 0; k < m(); ++k, word >>= ell()) r.coeffs[k] = word & mask;
    return r;
  }
  BigUint rest = j;
  for (unsigned k = 0; k < m(); ++k) {
    r.coeffs[k] = static_cast<std::uint64_t>(rest & mask);
    rest >>= ell();
  }
  return r;
}

BigUint ExtField::point_to_index(const ExtElem& a) const {
  check(a);
  if (total_bits() <= 64) {
    std::uint64_t word = 0;
    for (unsigned k = m(); k-- > 0;) word = (word << ell()) | a.coeffs[k];
    return word;
  }
  BigUint j = 0;
  for (unsigned k = m(); k-- > 0;) {
    j <<= ell();
    j |= a.coeffs[k];
  }
  return j;
}

BitString ExtField::to_bits(const ExtElem& a) const {
  check(a);
  BitString out(total_bits());
  for (unsigned k = 0; k < m(); ++k) {
    for (unsigned b = 0; b < ell(); ++b) {
      if ((a.coeffs[k] >> b) & 1u) out.set_bit(k * ell() + b, true);
    }
  }
  return out;
}

ExtElem ExtField::from_bits(const BitString& bits) const {
  if (bits.size() != total_bits()) throw ParameterError("bit string length does not match the extension field");
  ExtElem r = zero();
  for (unsigned k = 0; k < m(); ++k) r.coeffs[k] = bits.read_uint(k * ell(), ell());
  return r;
}

std::string to_string(const ExtPolyModulus& g) {
  std::string out;
  for (int k = static_cast<int>(g.m); k >= 0; --k) {
    std::uint64_t c = g.coeffs[k].bits;
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    std::string coeff = c == 1 && k > 0 ? "" : "[" + std::to_string(c) + "]";
    if (k == 0) {
      out += coeff.empty() ? "1" : coeff;
    } else {
      out += coeff + (k == 1 ? "y" : "y^" + std::to_string(k));
    }
  }
  return out;
}

}  // namespace evss
