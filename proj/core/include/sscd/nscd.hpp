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

#pragma once

// Secret sharing with no-signaling certified deletion for any monotone
// access structure. The secret is shared classically; each classical share
// is split by the 2-of-2 deletable scheme with parameter kappa; and each
// resulting classical part is shared again so that party i holds one slice
// of every party's classical part.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "sscd/access.hpp"
#include "sscd/bk2of2.hpp"
#include "sscd/css.hpp"
#include "sscd/game.hpp"

namespace sscd::nscd {

using Bytes = css::Bytes;
using Certificate = bk::Bits;

struct NscdShare {
  std::size_t index = 0;
  qsim::ProductShare qshare{gf::Field::get(2, 1)};
  std::vector<Bytes> classical_slice;  // [j-1] = slice of party j's classical part
  friend bool operator==(const NscdShare&, const NscdShare&) = default;
};

struct NscdKeys {
  std::vector<bk::VerificationKey> vk;  // [i-1] for share i
  std::size_t kappa = 0;
  friend bool operator==(const NscdKeys&, const NscdKeys&) = default;
};

struct NscdOptions {
  /// Overrides kappa = max(lambda, n)^2. Insecure; only for exhaustive
  /// small-instance experiments.
  std::optional<std::size_t> insecure_kappa;
  std::optional<css::SchemeTag> scheme;
};

struct NscdDealing {
  std::vector<NscdShare> shares;
  NscdKeys keys;
  css::SchemeTag scheme;
};

std::size_t kappa_for(std::size_t lambda, std::size_t n);

NscdDealing nscd_split(const access::AccessStructure& a, std::size_t lambda, const Bytes& secret, Rng& rng,
                       const NscdOptions& opts = {});

/// Consumes (measures) the quantum parts of the given shares. nullopt when
/// the share set is unauthorized or malformed.
std::optional<Bytes> nscd_reconstruct(const access::AccessStructure& a, css::SchemeTag scheme,
                                      std::vector<NscdShare> shares, Rng& rng);

Certificate nscd_delete(NscdShare& share, Rng& rng);
/// Throws std::out_of_range for i outside [1, n].
bool nscd_verify(const NscdKeys& keys, std::size_t i, const Certificate& cert);

// ---------------------------------------------------------------------------
// No-signaling game

struct BlockOutcome {
  std::map<std::size_t, Certificate> certs;  // absent index = no certificate
  Bytes residual;
};

/// One adversary per partition block. It sees only its block's shares.
using BlockAdversary = std::function<BlockOutcome(std::map<std::size_t, NscdShare>& shares, Rng& rng)>;

/// Deletes every share it receives; keeps nothing.
BlockAdversary honest_block_deleter();
/// Keeps every share and deletes nothing; reports its slice bytes.
BlockAdversary keep_everything();
/// Deletes only the listed shares.
BlockAdversary delete_only(std::vector<std::size_t> which);

/// Throws std::invalid_argument on an inadmissible partition. The outputs
/// are the block residuals when, for every authorized set, some member's
/// certificate verified; otherwise the transcript is aborted.
game::Transcript run_nscd_game(const access::AccessStructure& a, const std::vector<access::PartySet>& partition,
                               const std::vector<BlockAdversary>& adversaries, const Bytes& secret,
                               std::size_t lambda, Rng& rng, const NscdOptions& opts = {});

/// Statistical distance between the joint classical views of two honest
/// deleters, one per party, for the 1-bit secrets 0 and 1 under (2,2)
/// additive sharing at every layer. The view is both certificates and both
/// classical parts; the outer slices are a uniform pad away from those and
/// add nothing. Exact integer enumeration of the joint distribution for
/// kappa <= 4; for kappa in {5, 6} the joint table is too large and the
/// distance is assembled from the exact per-party tables, which factor
/// given the two classical shares.
double honest_view_distance_two_of_two(std::size_t kappa);

}  // namespace sscd::nscd
