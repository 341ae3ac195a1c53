// Copyright 2026 The sscd Authors.
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

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <regex>

#include "sscd/gf.hpp"

namespace sscd::gf {
namespace {

constexpr std::uint32_t kMaxOrder = 1u << 22;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Smallest irreducibles over GF(2), degree 1..24, packed with the leading bit.
constexpr std::uint32_t kBinaryModuli[] = {
    0x2,      0x7,      0xb,      0x13,     0x25,     0x43,     0x83,     0x11b,
    0x203,    0x409,    0x805,    0x1009,   0x201b,   0x4021,   0x8003,   0x1002b,
    0x20009,  0x40009,  0x80027,  0x100009, 0x200005, 0x400003, 0x800021, 0x100001b};

// Remainder of a modulo b over Z_p; both lowest first, b monic-or-not.
std::vector<std::uint32_t> poly_rem_zp(std::vector<std::uint32_t> a,
                                       std::span<const std::uint32_t> b, std::uint32_t p) {
  auto trim = [](std::vector<std::uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  std::size_t db = b.size() - 1;
  while (db > 0 && b[db] == 0) --db;
  std::uint64_t inv_lead = 1;
  {
    // Fermat inverse of the leading coefficient.
    std::uint64_t base = b[db], e = p - 2;
    while (e) {
      if (e & 1) inv_lead = inv_lead * base % p;
      base = base * base % p;
      e >>= 1;
    }
  }
  while (a.size() > db) {
    const std::size_t shift = a.size() - 1 - db;
    const std::uint64_t factor = a.back() * inv_lead % p;
    for (std::size_t i = 0; i <= db; ++i) {
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - factor * b[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

struct FieldRegistry {
  std::mutex mu;
  std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<Field>> fields;

  static FieldRegistry& instance() {
    static FieldRegistry registry;
    return registry;
  }

  const Field& intern(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    std::lock_guard lock(mu);
    auto key = std::make_pair(p, modulus);
    auto it = fields.find(key);
    if (it != fields.end()) return *it->second;
    auto field = std::unique_ptr<Field>(new Field(p, std::move(modulus)));
    auto& ref = *field;
    fields.emplace(std::move(key), std::move(field));
    return ref;
  }
};

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  std::size_t deg = modulus.size() - 1;
  while (deg > 0 && modulus[deg] % p == 0) --deg;
  if (deg == 0) return false;
  if (deg == 1) return true;
  // Every monic divisor candidate of degree d: enumerate its low coefficients.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    std::vector<std::uint32_t> cand(d + 1, 0);
    cand[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        cand[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      std::vector<std::uint32_t> a(modulus.begin(), modulus.begin() + deg + 1);
      if (poly_rem_zp(std::move(a), cand, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("extension degree must be >= 1");
  if (p == 2 && k <= std::size(kBinaryModuli)) {
    std::vector<std::uint32_t> out(k + 1);
    for (std::uint32_t i = 0; i <= k; ++i) out[i] = (kBinaryModuli[k - 1] >> i) & 1u;
    return out;
  }
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  std::vector<std::uint32_t> cand(k + 1, 0);
  cand[k] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (std::uint32_t i = 0; i < k; ++i) {
      cand[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(p, cand)) return cand;
  }
  throw std::logic_error("no irreducible polynomial found");
}

const Field& Field::get(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  return FieldRegistry::instance().intern(p, canonical_modulus(p, k));
}

const Field& Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw std::invalid_argument("modulus must be monic of degree >= 1");
  }
  for (auto c : modulus) {
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  }
  if (!is_irreducible(p, modulus)) throw std::invalid_argument("modulus is reducible");
  return FieldRegistry::instance().intern(p, std::move(modulus));
}

const Field& Field::parse(const std::string& text) {
  static const std::regex power(R"(^\s*(?:GF\()?\s*(\d+)\s*\^\s*(\d+)\s*\)?\s*$)");
  static const std::regex plain(R"(^\s*(?:GF\()?\s*(\d+)\s*\)?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, power)) {
    return get(static_cast<std::uint32_t>(std::stoul(m[1])),
               static_cast<std::uint32_t>(std::stoul(m[2])));
  }
  if (std::regex_match(text, m, plain)) {
    std::uint64_t q = std::stoull(m[1]);
    for (std::uint32_t p = 2; p <= q; ++p) {
      if (q % p != 0) continue;
      std::uint32_t k = 0;
      while (q % p == 0) {
        q /= p;
        ++k;
      }
      if (q != 1) break;
      return get(p, k);
    }
  }
  throw std::invalid_argument("cannot parse field '" + text + "'");
}

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(static_cast<std::uint32_t>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  std::uint64_t q = 1;
  pow_p_.resize(k_ + 1);
  for (std::uint32_t i = 0; i <= k_; ++i) {
    pow_p_[i] = static_cast<std::uint32_t>(q);
    if (i < k_) q *= p_;
    if (q > kMaxOrder) throw std::invalid_argument("field order exceeds supported maximum 2^22");
  }
  q_ = static_cast<std::uint32_t>(q);
  build_tables();
}

std::string Field::name() const {
  if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

std::vector<std::uint32_t> Field::coeffs(Value v) const {
  std::vector<std::uint32_t> out(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
  return out;
}

Value Field::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() != k_) throw std::invalid_argument("coefficient vector has wrong length");
  Value v = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
    v += c[i] * pow_p_[i];
  }
  return v;
}

Value Field::from_integer(std::uint64_t n) const {
  if (n >= q_) throw std::out_of_range("integer does not fit in the field");
  return static_cast<Value>(n);
}

Value Field::add(Value a, Value b) const {
  if (p_ == 2) return a ^ b;
  Value out = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return out;
}

Value Field::neg(Value a) const {
  if (p_ == 2) return a;
  Value out = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * pow_p_[i];
    a /= p_;
  }
  return out;
}

Value Field::sub(Value a, Value b) const { return add(a, neg(b)); }

Value Field::inv(Value a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
  if (q_ == 2) return 1;
  return exp_[(q_ - 1) - log_[a]];
}

Value Field::pow(Value a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t Field::zp_dot(Value a, Value b) const {
  std::uint64_t acc = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    acc += static_cast<std::uint64_t>(a % p_) * (b % p_);
    a /= p_;
    b /= p_;
  }
  return static_cast<std::uint32_t>(acc % p_);
}

Value Field::mul_by_reduction(Value a, Value b) const {
  const auto ca = coeffs(a);
  const auto cb = coeffs(b);
  std::vector<std::uint32_t> prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
    }
  }
  auto rem = poly_rem_zp(std::move(prod), modulus_, p_);
  rem.resize(k_, 0);
  return from_coeffs(rem);
}

void Field::build_tables() {
  exp_.assign(2 * static_cast<std::size_t>(q_ - 1), 0);
  log_.assign(q_, 0);
  if (q_ == 2) {
    exp_ = {1, 1};
    log_ = {0, 0};
    return;
  }
  // Find a multiplicative generator.
  const auto factors = prime_factors(q_ - 1);
  auto slow_pow = [&](Value a, std::uint64_t e) {
    Value r = 1;
    while (e) {
      if (e & 1) r = mul_by_reduction(r, a);
      a = mul_by_reduction(a, a);
      e >>= 1;
    }
    return r;
  };
  Value gen = 0;
  for (Value g = 2; g < q_ && gen == 0; ++g) {
    bool ok = true;
    for (auto f : factors) {
      if (slow_pow(g, (q_ - 1) / f) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) gen = g;
  }
  if (gen == 0) throw std::logic_error("no generator found");
  Value x = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = x;
    exp_[i + q_ - 1] = x;
    log_[x] = i;
    x = mul_by_reduction(x, gen);
  }
}

FieldElem::FieldElem(const Field& field, Value value) : field_(&field), value_(value) {
  if (!field.contains(value)) throw std::out_of_range("value outside field");
}

namespace {
const Field& common(const FieldElem& a, const FieldElem& b) {
  if (&a.field() != &b.field()) throw FieldMismatch();
  return a.field();
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  const auto& f = common(a, b);
  return {f, f.add(a.value(), b.value())};
}
FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  const auto& f = common(a, b);
  return {f, f.sub(a.value(), b.value())};
}
FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  const auto& f = common(a, b);
  return {f, f.mul(a.value(), b.value())};
}
FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  const auto& f = common(a, b);
  return {f, f.div(a.value(), b.value())};
}

FieldElem field_add(const FieldElem& a, const FieldElem& b) { return a + b; }
FieldElem field_mul(const FieldElem& a, const FieldElem& b) { return a * b; }
FieldElem field_inv(const FieldElem& a) { return {a.field(), a.field().inv(a.value())}; }

std::size_t hamming_weight(std::span<const Value> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Value x) { return x != 0; }));
}

}  // namespace sscd::gf
