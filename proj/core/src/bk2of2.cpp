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

#include "sscd/bk2of2.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace sscd::bk {
namespace {

using qsim::Basis;


void put_u32(Bytes& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(const Bytes& in, std::size_t at) {
  if (at + 4 > in.size()) throw std::invalid_argument("truncated classical share");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(in[at + i]) << (8 * i);
  return v;
}

// Dense embedding with one register per position so positions can be
// rotated individually.
qsim::DenseState per_position_state(const qsim::ProductShare& q) {
  std::vector<qsim::Register> regs;
  for (std::size_t i = 0; i < q.size(); ++i) regs.push_back({"q" + std::to_string(i), 1, &q.field()});
  return {qsim::QuditLayout(std::move(regs)), qsim::DenseState::from_product(q, "s").amplitudes()};
}

// Bit i of a dense index over n one-qubit registers (register 0 is the
// most significant).
inline std::uint8_t bit_of(std::size_t index, std::size_t i, std::size_t n) {
  return static_cast<std::uint8_t>((index >> (n - 1 - i)) & 1u);
}

}  // namespace

Share bk_split(std::size_t lambda, const Bits& secret, Rng& rng) {
  if (lambda == 0) throw std::invalid_argument("lambda must be positive");
  Bits x(lambda * secret.size()), theta(lambda * secret.size());
  for (auto& b : x) b = static_cast<std::uint8_t>(uniform_below(rng, 2));
  for (std::size_t blk = 0; blk < secret.size(); ++blk) {
    const auto first = theta.begin() + static_cast<std::ptrdiff_t>(blk * lambda);
    do {
      for (auto it = first; it != first + static_cast<std::ptrdiff_t>(lambda); ++it) {
        *it = static_cast<std::uint8_t>(uniform_below(rng, 2));
      }
    } while (std::all_of(first, first + static_cast<std::ptrdiff_t>(lambda), [](auto b) { return b == 1; }));
  }
  return bk_split_with(x, theta, secret);
}

Share bk_split_with(const Bits& x, const Bits& theta, const Bits& secret) {
  if (secret.empty() || x.size() != theta.size() || x.size() % secret.size() != 0 || x.empty()) {
    throw std::invalid_argument("x and theta need lambda bits per secret bit");
  }
  const std::size_t lambda = x.size() / secret.size();
  Share s;
  s.vk = {x, theta};
  s.cshare.lambda = lambda;
  s.cshare.theta = theta;
  for (std::size_t blk = 0; blk < secret.size(); ++blk) {
    std::uint8_t m = secret[blk] & 1u;
    bool has_data = false;
    for (std::size_t i = blk * lambda; i < (blk + 1) * lambda; ++i) {
      if (theta[i] == 0) {
        m ^= x[i];
        has_data = true;
      }
    }
    if (!has_data) throw std::invalid_argument("theta must have a zero in every block");
    s.cshare.masked.push_back(m);
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    s.qshare.push_back({theta[i] ? Basis::fourier : Basis::computational, x[i]});
  }
  return s;
}

Bits bk_reconstruct(qsim::ProductShare& qshare, const ClassicalShare& cshare, Rng& rng) {
  const std::size_t lambda = cshare.lambda;
  if (lambda == 0 || qshare.size() != cshare.theta.size() || qshare.size() != lambda * cshare.masked.size()) {
    throw std::invalid_argument("quantum and classical shares do not match");
  }
  Bits out(cshare.masked.size());
  for (std::size_t blk = 0; blk < out.size(); ++blk) {
    std::uint8_t m = cshare.masked[blk];
    for (std::size_t i = blk * lambda; i < (blk + 1) * lambda; ++i) {
      if (cshare.theta[i] == 0) m ^= static_cast<std::uint8_t>(qshare.measure(i, Basis::computational, rng));
    }
    out[blk] = m;
  }
  return out;
}

Bits bk_delete(qsim::ProductShare& qshare, Rng& rng) {
  Bits cert(qshare.size());
  for (std::size_t i = 0; i < cert.size(); ++i) {
    cert[i] = static_cast<std::uint8_t>(qshare.measure(i, Basis::fourier, rng));
  }
  return cert;
}

bool bk_verify(const VerificationKey& vk, const Bits& cert) {
  if (cert.size() != vk.x.size()) throw std::invalid_argument("certificate length mismatch");
  for (std::size_t i = 0; i < cert.size(); ++i) {
    if (vk.theta[i] == 1 && cert[i] != vk.x[i]) return false;
  }
  return true;
}

Bits bytes_to_bits(const Bytes& bytes) {
  Bits bits;
  bits.reserve(bytes.size() * 8);
  for (auto b : bytes) {
    for (int i = 0; i < 8; ++i) bits.push_back(static_cast<std::uint8_t>((b >> i) & 1u));
  }
  return bits;
}

Bytes bits_to_bytes(const Bits& bits) {
  Bytes out((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) out[i / 8] |= static_cast<std::uint8_t>((bits[i] & 1u) << (i % 8));
  return out;
}

Bytes encode_classical(const ClassicalShare& c) {
  Bytes out;
  put_u32(out, static_cast<std::uint32_t>(c.lambda));
  put_u32(out, static_cast<std::uint32_t>(c.masked.size()));
  const Bytes t = bits_to_bytes(c.theta), m = bits_to_bytes(c.masked);
  out.insert(out.end(), t.begin(), t.end());
  out.insert(out.end(), m.begin(), m.end());
  return out;
}

ClassicalShare decode_classical(const Bytes& bytes) {
  ClassicalShare c;
  c.lambda = get_u32(bytes, 0);
  const std::size_t nbits = get_u32(bytes, 4);
  const std::size_t tbits = c.lambda * nbits;
  const std::size_t tlen = (tbits + 7) / 8, mlen = (nbits + 7) / 8;
  if (c.lambda == 0 || bytes.size() != 8 + tlen + mlen) throw std::invalid_argument("malformed classical share");
  Bits t = bytes_to_bits(Bytes(bytes.begin() + 8, bytes.begin() + 8 + static_cast<std::ptrdiff_t>(tlen)));
  Bits m = bytes_to_bits(Bytes(bytes.begin() + 8 + static_cast<std::ptrdiff_t>(tlen), bytes.end()));
  t.resize(tbits);
  m.resize(nbits);
  c.theta = std::move(t);
  c.masked = std::move(m);
  return c;
}

// ---------------------------------------------------------------------------

double honest_delete_view_distance(std::size_t lambda) {
  if (lambda == 0 || lambda > 12) throw std::invalid_argument("lambda must be in [1, 12]");
  const std::size_t full = std::size_t{1} << lambda;
  // View (cert, theta, masked) -> integer weight scaled by 2^lambda per
  // (x, theta) so every count is exact.
  std::map<std::tuple<std::size_t, std::size_t, int>, std::int64_t> counts[2];
  std::int64_t total = 0;
  for (int s = 0; s < 2; ++s) {
    for (std::size_t theta = 0; theta + 1 < full; ++theta) {
      const std::size_t data_mask = ~theta & (full - 1);
      const std::size_t zeros = static_cast<std::size_t>(__builtin_popcountll(data_mask));
      for (std::size_t x = 0; x < full; ++x) {
        const int masked = s ^ (__builtin_popcountll(x & data_mask) & 1);
        // Data positions of the certificate range uniformly over all values.
        for (std::size_t sub = data_mask;; sub = (sub - 1) & data_mask) {
          const std::size_t cert = (x & theta) | sub;
          counts[s][{cert, theta, masked}] += std::int64_t{1} << (lambda - zeros);
          if (s == 0) total += std::int64_t{1} << (lambda - zeros);
          if (sub == 0) break;
        }
      }
    }
  }
  std::int64_t l1 = 0;
  for (const auto& [view, c] : counts[0]) {
    const auto it = counts[1].find(view);
    l1 += std::llabs(c - (it == counts[1].end() ? 0 : it->second));
  }
  for (const auto& [view, c] : counts[1]) {
    if (!counts[0].count(view)) l1 += c;
  }
  return 0.5 * static_cast<double>(l1) / static_cast<double>(total);
}

CheatAnalysis skip_one_dense(std::size_t lambda, std::size_t skipped) {
  if (lambda == 0 || lambda > 8 || skipped >= lambda) throw std::invalid_argument("bad skip-one instance");
  const std::size_t full = std::size_t{1} << lambda;
  const double p_theta = 1.0 / static_cast<double>(full - 1);
  const double p_x = 1.0 / static_cast<double>(full);
  // Output view: (outcomes, theta, masked); rejected runs output nothing.
  std::map<std::tuple<std::size_t, std::size_t, int>, double> dist[2];
  double rejected[2] = {0, 0};
  for (int s = 0; s < 2; ++s) {
    for (std::size_t theta = 0; theta + 1 < full; ++theta) {
      for (std::size_t x = 0; x < full; ++x) {
        Bits xb(lambda), tb(lambda);
        for (std::size_t i = 0; i < lambda; ++i) {
          xb[i] = bit_of(x, i, lambda);
          tb[i] = bit_of(theta, i, lambda);
        }
        const Share share = bk_split_with(xb, tb, Bits{static_cast<std::uint8_t>(s)});
        qsim::DenseState st = per_position_state(share.qshare);
        for (std::size_t i = 0; i < lambda; ++i) {
          if (i != skipped) st = qsim::qft_per_subfield(st, "q" + std::to_string(i));
        }
        const auto& amps = st.amplitudes();
        for (std::size_t out = 0; out < amps.size(); ++out) {
          const double w = std::norm(amps[out]) * p_theta * p_x;
          if (w < 1e-300) continue;
          bool ok = true;
          for (std::size_t i = 0; i < lambda && ok; ++i) {
            if (tb[i] == 1 && bit_of(out, i, lambda) != xb[i]) ok = false;
          }
          if (ok) {
            dist[s][{out, theta, share.cshare.masked[0]}] += w;
          } else {
            rejected[s] += w;
          }
        }
      }
    }
  }
  double l1 = std::abs(rejected[0] - rejected[1]);
  for (const auto& [view, w] : dist[0]) {
    const auto it = dist[1].find(view);
    l1 += std::abs(w - (it == dist[1].end() ? 0.0 : it->second));
  }
  for (const auto& [view, w] : dist[1]) {
    if (!dist[0].count(view)) l1 += w;
  }
  return {1.0 - rejected[0], 0.5 * l1};
}

CheatAnalysis skip_one_closed_form(std::size_t lambda) {
  const double nonfull = std::ldexp(1.0, static_cast<int>(lambda)) - 1.0;
  // Skipped position is a data position with probability 2^(lambda-1)/(2^lambda-1);
  // as a check position its computational outcome matches half the time.
  const double p_data = std::ldexp(1.0, static_cast<int>(lambda) - 1) / nonfull;
  return {p_data + 0.5 * (1.0 - p_data), 1.0 / nonfull};
}

double reconstruct_probability(const qsim::ProductShare& qshare, const ClassicalShare& cshare,
                               std::uint8_t secret) {
  if (cshare.masked.size() != 1 || qshare.size() != cshare.theta.size()) {
    throw std::invalid_argument("single-bit share expected");
  }
  const qsim::DenseState st = qsim::DenseState::from_product(qshare, "s");
  const std::size_t n = qshare.size();
  double p = 0;
  const auto& amps = st.amplitudes();
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    std::uint8_t m = cshare.masked[0];
    for (std::size_t i = 0; i < n; ++i) {
      if (cshare.theta[i] == 0) m ^= bit_of(idx, i, n);
    }
    if (m == secret) p += std::norm(amps[idx]);
  }
  return p;
}

}  // namespace sscd::bk
