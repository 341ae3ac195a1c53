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

#include "sscd/nscd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sscd::nscd {

std::size_t kappa_for(std::size_t lambda, std::size_t n) {
  const std::size_t m = std::max(lambda, n);
  return m * m;
}

NscdDealing nscd_split(const access::AccessStructure& a, std::size_t lambda, const Bytes& secret, Rng& rng,
                       const NscdOptions& opts) {
  if (lambda == 0) throw std::invalid_argument("lambda must be positive");
  const std::size_t n = a.n();
  const std::size_t kappa = opts.insecure_kappa.value_or(kappa_for(lambda, n));
  if (kappa == 0) throw std::invalid_argument("kappa must be positive");
  const css::SchemeTag scheme = opts.scheme.value_or(css::default_scheme(a));

  NscdDealing out;
  out.scheme = scheme;
  out.keys.kappa = kappa;
  out.shares.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.shares[i].index = i + 1;
    out.shares[i].classical_slice.resize(n);
  }

  const css::ClassicalShareSet outer = css::csplit(a, secret, rng, scheme);
  for (std::size_t i = 0; i < n; ++i) {
    bk::Share inner = bk::bk_split(kappa, bk::bytes_to_bits(outer.shares[i]), rng);
    out.shares[i].qshare = std::move(inner.qshare);
    out.keys.vk.push_back(std::move(inner.vk));
    const css::ClassicalShareSet slices = css::csplit(a, bk::encode_classical(inner.cshare), rng, scheme);
    for (std::size_t j = 0; j < n; ++j) out.shares[j].classical_slice[i] = slices.shares[j];
  }
  return out;
}

std::optional<Bytes> nscd_reconstruct(const access::AccessStructure& a, css::SchemeTag scheme,
                                      std::vector<NscdShare> shares, Rng& rng) {
  std::vector<std::size_t> parties;
  for (const auto& s : shares) {
    if (s.index < 1 || s.index > a.n() || s.classical_slice.size() != a.n()) return std::nullopt;
    parties.push_back(s.index);
  }
  if (!a.is_authorized(parties)) return std::nullopt;

  css::ShareMap outer;
  for (auto& s : shares) {
    css::ShareMap slices;
    for (const auto& holder : shares) slices[holder.index] = holder.classical_slice[s.index - 1];
    const auto encoded = css::creconstruct(a, scheme, slices);
    if (!encoded) return std::nullopt;
    bk::ClassicalShare cshare;
    try {
      cshare = bk::decode_classical(*encoded);
      outer[s.index] = bk::bits_to_bytes(bk::bk_reconstruct(s.qshare, cshare, rng));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  return css::creconstruct(a, scheme, outer);
}

Certificate nscd_delete(NscdShare& share, Rng& rng) { return bk::bk_delete(share.qshare, rng); }

bool nscd_verify(const NscdKeys& keys, std::size_t i, const Certificate& cert) {
  if (i < 1 || i > keys.vk.size()) throw std::out_of_range("share index out of range");
  return bk::bk_verify(keys.vk[i - 1], cert);
}

// ---------------------------------------------------------------------------

BlockAdversary honest_block_deleter() {
  return [](std::map<std::size_t, NscdShare>& shares, Rng& rng) {
    BlockOutcome out;
    for (auto& [i, s] : shares) out.certs[i] = nscd_delete(s, rng);
    return out;
  };
}

BlockAdversary keep_everything() {
  return [](std::map<std::size_t, NscdShare>& shares, Rng&) {
    BlockOutcome out;
    for (const auto& [i, s] : shares) {
      for (const auto& slice : s.classical_slice) out.residual.insert(out.residual.end(), slice.begin(), slice.end());
    }
    return out;
  };
}

BlockAdversary delete_only(std::vector<std::size_t> which) {
  return [which = std::move(which)](std::map<std::size_t, NscdShare>& shares, Rng& rng) {
    BlockOutcome out;
    for (auto& [i, s] : shares) {
      if (std::find(which.begin(), which.end(), i) != which.end()) out.certs[i] = nscd_delete(s, rng);
    }
    return out;
  };
}

game::Transcript run_nscd_game(const access::AccessStructure& a, const std::vector<access::PartySet>& partition,
                               const std::vector<BlockAdversary>& adversaries, const Bytes& secret,
                               std::size_t lambda, Rng& rng, const NscdOptions& opts) {
  if (!a.is_admissible_partition(partition)) {
    throw std::invalid_argument("inadmissible partition: a block is authorized");
  }
  if (adversaries.size() != partition.size()) throw std::invalid_argument("one adversary per block expected");

  NscdDealing dealing = nscd_split(a, lambda, secret, rng, opts);
  game::Transcript t;
  std::vector<Bytes> residuals;
  access::Mask verified = 0;
  for (std::size_t b = 0; b < partition.size(); ++b) {
    // Each block sees only its own shares; nothing flows between blocks.
    std::map<std::size_t, NscdShare> block;
    for (auto i : partition[b]) {
      block.emplace(i, std::move(dealing.shares[i - 1]));
      t.corrupted.push_back(i);
      t.events.push_back({game::EventKind::corrupt, i, true, "block " + std::to_string(b + 1)});
    }
    BlockOutcome outcome = adversaries[b](block, rng);
    for (const auto& [i, cert] : outcome.certs) {
      if (std::find(partition[b].begin(), partition[b].end(), i) == partition[b].end()) {
        throw std::logic_error("block adversary certified a share outside its block");
      }
      const bool ok = nscd_verify(dealing.keys, i, cert);
      t.events.push_back({game::EventKind::verify, i, ok, ""});
      if (ok) {
        verified |= access::Mask{1} << (i - 1);
        t.deleted.push_back(i);
        t.events.push_back({game::EventKind::delete_share, i, true, ""});
      }
    }
    residuals.push_back(std::move(outcome.residual));
  }
  // Every authorized set must contain a verified share, i.e. the parties
  // without a verified certificate are unauthorized.
  const access::Mask all = (access::Mask{1} << a.n()) - 1;
  if (a.is_authorized(all & ~verified)) {
    t.aborted = true;
    t.abort_reason = "unverified shares form an authorized set";
    t.events.push_back({game::EventKind::abort, 0, false, t.abort_reason});
    return t;
  }
  t.events.push_back({game::EventKind::end, 0, true, ""});
  t.events.push_back({game::EventKind::output, 0, true, ""});
  t.outputs = std::move(residuals);
  return t;
}

// ---------------------------------------------------------------------------

namespace {

// Honest-deleter view of one 2-of-2 instance for bit b: key packs
// (cert, theta, masked); counts are scaled by 2^kappa per (x, theta).
std::vector<std::int64_t> instance_view_counts(std::size_t kappa, int b) {
  const std::size_t full = std::size_t{1} << kappa;
  std::vector<std::int64_t> counts(full * full * 2, 0);
  for (std::size_t theta = 0; theta + 1 < full; ++theta) {
    const std::size_t data = ~theta & (full - 1);
    const std::size_t zeros = static_cast<std::size_t>(__builtin_popcountll(data));
    for (std::size_t x = 0; x < full; ++x) {
      const std::size_t masked = static_cast<std::size_t>(b ^ (__builtin_popcountll(x & data) & 1));
      for (std::size_t sub = data;; sub = (sub - 1) & data) {
        const std::size_t cert = (x & theta) | sub;
        counts[(cert * full + theta) * 2 + masked] += std::int64_t{1} << (kappa - zeros);
        if (sub == 0) break;
      }
    }
  }
  return counts;
}

}  // namespace

double honest_view_distance_two_of_two(std::size_t kappa) {
  if (kappa == 0 || kappa > 6) throw std::invalid_argument("kappa must be in [1, 6]");
  const std::vector<std::int64_t> q[2] = {instance_view_counts(kappa, 0), instance_view_counts(kappa, 1)};
  const std::size_t w = q[0].size();
  double total = 0;
  for (auto c : q[0]) total += static_cast<double>(c);

  if (kappa <= 4) {
    // Joint table over (view of party 1, view of party 2); the outer split
    // of s is (r, s xor r) for a uniform bit r.
    std::vector<std::int64_t> joint[2] = {std::vector<std::int64_t>(w * w, 0), std::vector<std::int64_t>(w * w, 0)};
    for (int s = 0; s < 2; ++s) {
      for (int r = 0; r < 2; ++r) {
        const auto& q1 = q[r];
        const auto& q2 = q[s ^ r];
        for (std::size_t v1 = 0; v1 < w; ++v1) {
          if (q1[v1] == 0) continue;
          for (std::size_t v2 = 0; v2 < w; ++v2) joint[s][v1 * w + v2] += q1[v1] * q2[v2];
        }
      }
    }
    std::int64_t l1 = 0;
    for (std::size_t i = 0; i < w * w; ++i) l1 += std::llabs(joint[0][i] - joint[1][i]);
    return 0.5 * static_cast<double>(l1) / (2.0 * total * total);
  }
  // Given (sh_1, sh_2) the two views are independent, so
  // P_0 - P_1 = -(Q_0 - Q_1) (x) (Q_0 - Q_1) / 2 and the distance is
  // half the square of the per-party L1 gap.
  std::int64_t l1 = 0;
  for (std::size_t i = 0; i < w; ++i) l1 += std::llabs(q[0][i] - q[1][i]);
  const double d = static_cast<double>(l1) / total;
  return 0.25 * d * d;
}

}  // namespace sscd::nscd
