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

#include "sscd/acd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sscd::acd {

namespace {

// ceil that tolerates floating-point noise on exact integers
std::size_t ceil_u(double x) { return static_cast<std::size_t>(std::ceil(x - 1e-9)); }

double log2_lambda(std::size_t lambda) { return std::log2(static_cast<double>(lambda)); }

void fill_derived(AcdParams& p) {
  p.t_prime = p.t - p.r;
  p.deg_p = (p.k - 1) * p.t_prime + (p.n - p.k + 1) * p.ell;
}

bool inequality_holds(const AcdParams& p) {
  return p.k * p.t > p.deg_p && 2 * p.k * p.r < p.k * p.t - p.deg_p;
}

}  // namespace

const char* to_string(Variant v) {
  switch (v) {
    case Variant::loose: return "loose";
    case Variant::tight: return "tight";
    case Variant::manual: return "manual";
  }
  return "?";
}

Variant variant_from_string(const std::string& s) {
  if (s == "loose") return Variant::loose;
  if (s == "tight") return Variant::tight;
  if (s == "manual") return Variant::manual;
  throw std::invalid_argument("unknown parameter variant: " + s);
}

const gf::Field& share_field(std::size_t n, std::size_t t) {
  std::uint32_t m = 1;
  while ((std::uint64_t{1} << m) < n * t + 1) ++m;
  if (m > 22) throw std::invalid_argument("share field would exceed 2^22 elements");
  return gf::Field::get(2, m);
}

AcdParams derive_params(std::size_t lambda, std::size_t n, std::size_t k, Variant variant) {
  if (variant == Variant::manual) throw std::invalid_argument("manual parameters need explicit t, r, ell");
  if (lambda < 2) throw std::invalid_argument("lambda must be at least 2");
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  const double L = log2_lambda(lambda);
  const double c = static_cast<double>(n - k + 1) * L;
  const double lam = static_cast<double>(lambda);

  AcdParams p;
  p.n = n;
  p.k = k;
  p.lambda = lambda;
  p.variant = variant;
  double t0;
  if (variant == Variant::loose) {
    p.r = ceil_u((lam + c) * (lam + c));
    t0 = static_cast<double>(k + 1) * static_cast<double>(p.r) * (1.0 + c / lam) + 1.0;
  } else {
    p.r = ceil_u(lam + c * c);
    const double denom = std::sqrt(static_cast<double>(p.r)) - c;
    if (denom <= 0) throw std::logic_error("tight parameters degenerate");
    t0 = static_cast<double>(k + 1) * static_cast<double>(p.r) * (1.0 + c / denom) + 1.0;
  }
  p.t = ceil_u(t0);
  for (;;) {
    p.ell = ceil_u(static_cast<double>(p.t) * L / std::sqrt(static_cast<double>(p.r)));
    fill_derived(p);
    if (inequality_holds(p)) break;
    ++p.t;
  }
  p.field = &share_field(n, p.t);
  auto v = validate_params(p);
  if (!v.ok) throw std::logic_error("derived parameters invalid: " + v.diagnostic);
  return p;
}

AcdParams manual_params(std::size_t n, std::size_t k, std::size_t t, std::size_t r, std::size_t ell,
                        const gf::Field* field) {
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  if (r > t) throw std::invalid_argument("need r <= t");
  AcdParams p;
  p.n = n;
  p.k = k;
  p.t = t;
  p.r = r;
  p.ell = ell;
  p.variant = Variant::manual;
  fill_derived(p);
  p.field = field ? field : &share_field(n, t);
  return p;
}

Validation validate_params(const AcdParams& p) {
  auto fail = [](std::string d) { return Validation{false, std::move(d)}; };
  if (p.n < 1 || p.k < 1 || p.k > p.n) return fail("need 1 <= k <= n");
  if (p.t == 0) return fail("t must be positive");
  if (p.r == 0) return fail("r must be positive");
  if (p.r >= p.t) return fail("need r < t so that t' = t - r > 0");
  if (p.t_prime != p.t - p.r) return fail("t' must equal t - r");
  if (p.ell == 0) return fail("ell must be positive");
  if (p.deg_p != (p.k - 1) * p.t_prime + (p.n - p.k + 1) * p.ell) {
    return fail("deg_p must equal (k-1)t' + (n-k+1)ell");
  }
  if (!p.field) return fail("no field");
  if (p.field->characteristic() != 2) return fail("field must have characteristic 2");
  if (p.field->order() < p.n * p.t + 1) return fail("field needs at least nt + 1 elements");
  if (p.lambda >= 2 && p.variant != Variant::manual) {
    const double c = static_cast<double>(p.n - p.k + 1) * log2_lambda(p.lambda);
    if (1.0 - c / std::sqrt(static_cast<double>(p.r)) <= 0) {
      return fail("need 1 - (n-k+1) log(lambda) / sqrt(r) > 0");
    }
  }
  if (!inequality_holds(p)) {
    return fail("correction inequality 2kr < kt - deg_p fails: 2kr = " + std::to_string(2 * p.k * p.r) +
                ", kt - deg_p = " +
                (p.k * p.t >= p.deg_p ? std::to_string(p.k * p.t - p.deg_p)
                                      : "-" + std::to_string(p.deg_p - p.k * p.t)));
  }
  return {true, {}};
}

std::size_t eval_index(const AcdParams& p, std::size_t i, std::size_t j) {
  if (i < 1 || i > p.n || j < 1 || j > p.t) throw std::out_of_range("share or position index out of range");
  return (i - 1) * p.t + j;
}

AcdDealing acd_split(const AcdParams& p, Value secret, Rng& rng) {
  auto v = validate_params(p);
  if (!v.ok) throw std::invalid_argument("invalid parameters: " + v.diagnostic);
  const gf::Field& K = *p.field;
  if (!K.contains(secret)) throw std::invalid_argument("secret is not a field element");

  std::vector<Value> coeffs(p.deg_p + 1);
  coeffs[0] = secret;
  for (std::size_t d = 1; d <= p.deg_p; ++d) coeffs[d] = static_cast<Value>(uniform_below(rng, K.order()));
  AcdDealing out{{}, {}, gf::Polynomial(K, std::move(coeffs))};

  std::vector<std::size_t> positions(p.t);
  std::iota(positions.begin(), positions.end(), std::size_t{1});
  std::vector<Value> xs;
  xs.reserve(p.n * p.t);
  for (std::size_t i = 1; i <= p.n; ++i)
    for (std::size_t j = 1; j <= p.t; ++j) xs.push_back(K.from_integer(eval_index(p, i, j)));
  const auto values = out.polynomial.eval_many(xs);
  for (std::size_t i = 1; i <= p.n; ++i) {
    std::shuffle(positions.begin(), positions.end(), rng);
    std::vector<std::size_t> data(positions.begin(), positions.begin() + static_cast<std::ptrdiff_t>(p.t_prime));
    std::sort(data.begin(), data.end());
    std::vector<bool> is_data(p.t + 1, false);
    for (auto j : data) is_data[j] = true;

    ShareKey key;
    key.data = data;
    AcdShare share;
    share.index = i;
    share.positions = qsim::ProductShare(K);
    for (std::size_t j = 1; j <= p.t; ++j) {
      if (is_data[j]) {
        share.positions.push_back({qsim::Basis::computational, values[eval_index(p, i, j) - 1]});
      } else {
        Value y = static_cast<Value>(uniform_below(rng, K.order()));
        share.positions.push_back({qsim::Basis::fourier, y});
        key.checks.emplace_back(j, y);
      }
    }
    out.shares.push_back(std::move(share));
    out.vk.shares.push_back(std::move(key));
  }
  return out;
}

Reconstructor::Reconstructor(AcdParams p) : p_(p) {
  auto v = validate_params(p_);
  if (!v.ok) throw std::invalid_argument("invalid parameters: " + v.diagnostic);
}

const gf::ReedSolomonDecoder& Reconstructor::decoder_for(const std::vector<std::size_t>& chosen) {
  auto it = cache_.find(chosen);
  if (it != cache_.end()) return it->second;
  std::vector<Value> xs;
  xs.reserve(p_.k * p_.t);
  for (auto i : chosen) {
    for (std::size_t j = 1; j <= p_.t; ++j) xs.push_back(p_.field->from_integer(eval_index(p_, i, j)));
  }
  return cache_.emplace(chosen, gf::ReedSolomonDecoder(*p_.field, p_.deg_p, std::move(xs))).first->second;
}

std::optional<Value> Reconstructor::operator()(std::vector<AcdShare> shares, Rng& rng, ReconstructAudit* audit) {
  std::sort(shares.begin(), shares.end(), [](const AcdShare& a, const AcdShare& b) { return a.index < b.index; });
  shares.erase(std::unique(shares.begin(), shares.end(),
                           [](const AcdShare& a, const AcdShare& b) { return a.index == b.index; }),
               shares.end());
  if (shares.size() < p_.k) return std::nullopt;
  shares.resize(p_.k);

  std::vector<std::size_t> chosen;
  std::vector<Value> ys;
  ys.reserve(p_.k * p_.t);
  for (auto& s : shares) {
    if (s.index < 1 || s.index > p_.n) throw std::out_of_range("share index out of range");
    if (s.positions.size() != p_.t || &s.positions.field() != p_.field) {
      throw std::invalid_argument("share does not match the parameters");
    }
    chosen.push_back(s.index);
    auto vals = s.positions.measure_all(qsim::Basis::computational, rng);
    ys.insert(ys.end(), vals.begin(), vals.end());
  }
  const auto& dec = decoder_for(chosen);
  if (audit) {
    audit->chosen = chosen;
    audit->xs = dec.xs();
    audit->ys = ys;
  }
  auto f = dec.decode(ys);
  if (!f) return std::nullopt;
  return f->coeff(0);
}

std::optional<Value> acd_reconstruct(const AcdParams& p, std::vector<AcdShare> shares, Rng& rng) {
  Reconstructor rec(p);
  return rec(std::move(shares), rng);
}

Certificate acd_delete(AcdShare& share, Rng& rng) { return share.positions.measure_all(qsim::Basis::fourier, rng); }

bool acd_verify(const AcdVerificationKey& vk, std::size_t i, const Certificate& cert) {
  if (i < 1 || i > vk.shares.size()) throw std::out_of_range("share index out of range");
  const ShareKey& key = vk.shares[i - 1];
  if (cert.size() != key.data.size() + key.checks.size()) {
    throw std::invalid_argument("certificate length does not match t");
  }
  for (const auto& [j, y] : key.checks) {
    if (cert[j - 1] != y) return false;
  }
  return true;
}

game::Transcript run_acd_game(const AcdParams& p, Adversary& adversary, Value secret, Rng& rng) {
  AcdDealing d = acd_split(p, secret, rng);
  auto a = access::AccessStructure::threshold(p.k, p.n);
  const AcdVerificationKey& vk = d.vk;
  std::function<bool(std::size_t, const Certificate&)> verify = [&vk](std::size_t i, const Certificate& c) {
    if (c.size() != vk.shares.at(i - 1).data.size() + vk.shares.at(i - 1).checks.size()) return false;
    return acd_verify(vk, i, c);
  };
  return game::run_adaptive_game<AcdShare, Certificate>(a, std::move(d.shares), verify, adversary, rng);
}

PurifiedResult purified_deletion_check(const gf::Field& field, std::size_t t, std::size_t r, std::size_t ell,
                                       bool honest, Rng& rng) {
  if (r > t) throw std::invalid_argument("need r <= t");
  const std::size_t tp = t - r;
  std::vector<qsim::Register> regs{{"CJ", tp, &field}, {"CC", r, &field}, {"SJ", tp, &field}, {"SC", r, &field}};
  qsim::QuditLayout layout(regs);

  // uniform superposition on C, copied into S
  qsim::DenseState s(layout);
  s.mutable_amplitudes()[0] = 1.0;
  s = qsim::qft_per_subfield(s, "CJ", true);
  s = qsim::qft_per_subfield(s, "CC", true);
  s = qsim::copy_isometry(s, "CJ", "SJ", qsim::Basis::computational);
  s = qsim::copy_isometry(s, "CC", "SC", qsim::Basis::computational);

  auto basis = honest ? &qsim::measure_fourier : &qsim::measure_computational;
  auto mj = basis(s, "SJ", rng);
  auto mc = basis(mj.collapsed, "SC", rng);
  auto y = qsim::measure_fourier(mc.collapsed, "CC", rng);

  PurifiedResult out{};
  out.verified = (y.outcome == mc.outcome);
  out.predicate_probability = qsim::deletion_predicate_probability(y.collapsed, "CJ", mj.outcome, ell);

  if (honest) {
    out.expected = 1.0;
  } else {
    // C_J collapses to a computational basis state, so its Fourier outcome
    // is uniform over K^t'.
    const double q = field.order();
    double acc = 0, binom = 1;
    for (std::size_t d = 0; 2 * d < ell && d <= tp; ++d) {
      acc += binom * std::pow(q - 1, static_cast<double>(d));
      binom = binom * static_cast<double>(tp - d) / static_cast<double>(d + 1);
    }
    out.expected = acc / std::pow(q, static_cast<double>(tp));
  }
  return out;
}

}  // namespace sscd::acd
