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

// Adversary strategies, exact acceptance statistics and the experiment
// runner behind the command-line tool.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sscd/access.hpp"
#include "sscd/acd.hpp"
#include "sscd/game.hpp"
#include "sscd/nscd.hpp"

namespace sscd::harness {

/// P[hyper(t, r, g) = h]: overlap of g fixed positions with r random ones.
double hypergeometric_pmf(std::size_t t, std::size_t r, std::size_t g, std::size_t h);

/// Probability that a cheater who measures t - g positions honestly and
/// sends uniform guesses at the other g passes verification.
double cheat_acceptance_exact(std::size_t t, std::size_t r, std::size_t g, std::uint64_t q);

/// 2 exp(-r ell^2 / (2 t^2)); equals 2 exp(-log2(lambda)^2 / 2) when
/// ell = t log2(lambda) / sqrt(r).
double hoeffding_bound(double t, double r, double ell);
double hoeffding_bound_for_lambda(double lambda);

enum class StrategyKind { honest_delete, corrupt_all_then_end, guess_g_cheater, corrupt_delete_retain, scripted };
const char* to_string(StrategyKind k);
StrategyKind strategy_kind_from_string(const std::string& s);

struct ScriptStep {
  enum class Op { corrupt, delete_honest, delete_retain, end } op;
  std::size_t index = 0;
  friend bool operator==(const ScriptStep&, const ScriptStep&) = default;
};
const char* to_string(ScriptStep::Op op);
ScriptStep::Op script_op_from_string(const std::string& s);

struct Strategy {
  StrategyKind kind = StrategyKind::honest_delete;
  std::size_t g = 0;                // guess_g_cheater
  std::vector<ScriptStep> script;   // scripted
  friend bool operator==(const Strategy&, const Strategy&) = default;
};

/// Throws std::invalid_argument when a scripted step names an index outside
/// [1, n] or g exceeds t.
void validate_strategy(const Strategy& s, std::size_t n, std::size_t t);

// --- acd ------------------------------------------------------------------

/// Game outputs encode a field element as 4 little-endian bytes.
game::Bytes encode_value(gf::Value v);
std::optional<gf::Value> decode_value(const game::Bytes& b);

std::unique_ptr<acd::Adversary> make_acd_adversary(const Strategy& s, const acd::AcdParams& p);

// --- nscd in the adaptive game ---------------------------------------------

using NscdAdversary = game::AdaptiveAdversary<nscd::NscdShare, nscd::Certificate>;

/// For corrupt_delete_retain: deletes honestly until it holds classical
/// slices from an authorized set, then for each later share rebuilds its
/// classical part from the slices, measures the data positions and
/// certifies the check positions, and finally reconstructs the secret from
/// the unmasked classical shares.
std::unique_ptr<NscdAdversary> make_nscd_adversary(const Strategy& s, const access::AccessStructure& a,
                                                   css::SchemeTag scheme);

game::Transcript run_nscd_adaptive_game(const access::AccessStructure& a, std::size_t lambda,
                                        const nscd::Bytes& secret, NscdAdversary& adversary, Rng& rng,
                                        const nscd::NscdOptions& opts = {});

/// Single-share Monte Carlo of the guess-g cheater over a field of order q:
/// r random check positions, the first g positions measured
/// computationally and replaced by uniform guesses, the rest deleted
/// honestly. `tail` counts acceptance together with at least ell/2
/// mismatches on data positions against the challenger's Hadamard values.
struct GuessEstimate {
  double acceptance;
  double tail;
  std::size_t trials;
};
GuessEstimate simulate_guess_cheater(std::size_t t, std::size_t r, std::size_t g, const gf::Field& field,
                                     std::size_t ell, std::size_t trials, Rng& rng);

// --- experiments -----------------------------------------------------------

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string scheme = "acd";  // acd | nscd
  std::size_t n = 3;
  std::size_t k = 2;
  std::vector<access::PartySet> minimal;  // general structure for nscd when non-empty
  std::size_t lambda = 16;
  acd::Variant variant = acd::Variant::manual;
  std::size_t t = 12, r = 2, ell = 1;  // manual acd parameters
  std::optional<std::uint32_t> field_degree;  // manual acd field GF(2^d)
  std::optional<std::size_t> insecure_kappa;  // nscd
  Strategy strategy;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

struct Metric {
  std::string name;
  double estimate = 0;
  std::size_t trials = 0;
  std::optional<double> exact;
  std::optional<double> bound;
  std::string criterion;  // how pass was decided
  bool pass = true;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<Metric> metrics;
  bool pass = true;
};

/// Validates and runs `trials` independent games; trial i draws from
/// trial_rng(seed, i). Throws ConfigError on an invalid config.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Within 4 binomial standard deviations of the exact value (exact 0 or 1
/// must be hit exactly).
bool within_sigma(double estimate, double exact, std::size_t trials, double sigmas = 4.0);

}  // namespace sscd::harness
