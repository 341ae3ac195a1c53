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

#include <cmath>

#include "gtest/gtest.h"
#include "sscd/harness.hpp"

namespace sscd::harness {
namespace {

TEST(CheatAcceptanceTest, Examples) {
  EXPECT_DOUBLE_EQ(cheat_acceptance_exact(6, 2, 0, 4), 1.0);
  EXPECT_NEAR(cheat_acceptance_exact(6, 2, 1, 4), 0.75, 1e-12);
  EXPECT_NEAR(cheat_acceptance_exact(6, 2, 1, std::uint64_t{1} << 40), 4.0 / 6.0, 1e-9);
  EXPECT_NEAR(cheat_acceptance_exact(12, 2, 12, 64), 1.0 / 4096, 1e-15);
  EXPECT_THROW(cheat_acceptance_exact(6, 2, 7, 4), std::invalid_argument);
}

TEST(CheatAcceptanceTest, MatchesEnumerationOfCheckSets) {
  // average over all r-subsets of [t] of q^-|S cap [g]|
  for (auto [t, r, g, q] : {std::array<std::size_t, 4>{6, 2, 1, 4}, {8, 3, 2, 4}, {7, 3, 4, 2}}) {
    double sum = 0;
    std::size_t count = 0;
    for (std::uint32_t s = 0; s < (1u << t); ++s) {
      if (static_cast<std::size_t>(__builtin_popcount(s)) != r) continue;
      ++count;
      sum += std::pow(static_cast<double>(q), -__builtin_popcount(s & ((1u << g) - 1)));
    }
    EXPECT_NEAR(cheat_acceptance_exact(t, r, g, q), sum / count, 1e-12);
  }
}

TEST(HoeffdingTest, LambdaForm) {
  EXPECT_NEAR(hoeffding_bound_for_lambda(16), 2 * std::exp(-8.0), 1e-15);
  double prev = 3;
  for (double l : {4.0, 8.0, 16.0, 32.0}) {
    EXPECT_LT(hoeffding_bound_for_lambda(l), prev);
    prev = hoeffding_bound_for_lambda(l);
  }
  // with ell = t log(lambda)/sqrt(r) both forms agree
  const double t = 100, r = 64, lam = 16;
  EXPECT_NEAR(hoeffding_bound(t, r, t * std::log2(lam) / std::sqrt(r)), hoeffding_bound_for_lambda(lam), 1e-12);
}

TEST(GuessCheaterTest, SimulationMatchesExact) {
  Rng rng(1);
  const std::size_t n = 10000;
  auto est = simulate_guess_cheater(6, 2, 1, gf::Field::get(2, 2), 2, n, rng);
  EXPECT_TRUE(within_sigma(est.acceptance, 0.75, n)) << est.acceptance;
  EXPECT_LE(est.tail, est.acceptance);
}

TEST(ExperimentTest, HonestAcdDeletion) {
  ExperimentConfig c;
  c.trials = 50;
  auto r = run_experiment(c);
  ASSERT_EQ(r.metrics.size(), 1u);
  EXPECT_EQ(r.metrics[0].estimate, 1.0);
  EXPECT_TRUE(r.pass);
}

TEST(ExperimentTest, GuessCheaterGame) {
  ExperimentConfig c;
  c.strategy = {StrategyKind::guess_g_cheater, 1, {}};
  c.trials = 2000;
  auto r = run_experiment(c);
  EXPECT_TRUE(r.pass) << r.metrics[0].estimate << " vs " << *r.metrics[0].exact;
}

TEST(ExperimentTest, AttackWinsAgainstNscdOnly) {
  ExperimentConfig c;
  c.scheme = "nscd";
  c.lambda = 3;
  c.strategy.kind = StrategyKind::corrupt_delete_retain;
  c.trials = 20;
  auto r = run_experiment(c);
  EXPECT_EQ(r.metrics[0].estimate, 1.0);
  EXPECT_TRUE(r.pass);

  c.scheme = "acd";
  c.trials = 200;
  auto s = run_experiment(c);
  ASSERT_EQ(s.metrics.size(), 2u);
  EXPECT_TRUE(s.pass);
  EXPECT_EQ(s.metrics[1].estimate, 0.0);
}

TEST(ExperimentTest, CorruptAllAborts) {
  for (const char* scheme : {"acd", "nscd"}) {
    ExperimentConfig c;
    c.scheme = scheme;
    c.lambda = 2;
    c.strategy.kind = StrategyKind::corrupt_all_then_end;
    c.trials = 10;
    auto r = run_experiment(c);
    EXPECT_EQ(r.metrics[0].estimate, 1.0) << scheme;
  }
}

TEST(ExperimentTest, Deterministic) {
  ExperimentConfig c;
  c.strategy = {StrategyKind::guess_g_cheater, 3, {}};
  c.trials = 300;
  c.seed = 99;
  auto a = run_experiment(c);
  auto b = run_experiment(c);
  EXPECT_EQ(a.metrics[0].estimate, b.metrics[0].estimate);
}

TEST(ExperimentTest, ConfigErrors) {
  ExperimentConfig c;
  c.scheme = "other";
  EXPECT_THROW(run_experiment(c), ConfigError);
  c = {};
  c.t = 8;
  EXPECT_THROW(run_experiment(c), ConfigError);
  c = {};
  c.strategy = {StrategyKind::scripted, 0, {{ScriptStep::Op::corrupt, 9}}};
  EXPECT_THROW(run_experiment(c), ConfigError);
  c = {};
  c.scheme = "nscd";
  c.strategy.kind = StrategyKind::guess_g_cheater;
  EXPECT_THROW(run_experiment(c), ConfigError);
}

TEST(ExperimentTest, ScriptedGame) {
  ExperimentConfig c;
  c.strategy = {StrategyKind::scripted,
                0,
                {{ScriptStep::Op::corrupt, 2}, {ScriptStep::Op::delete_honest, 2}, {ScriptStep::Op::corrupt, 3}}};
  c.trials = 5;
  auto r = run_experiment(c);
  EXPECT_EQ(r.metrics[0].name, "completed");
  EXPECT_EQ(r.metrics[0].estimate, 1.0);
}

TEST(NamesTest, RoundTrip) {
  for (auto k : {StrategyKind::honest_delete, StrategyKind::corrupt_all_then_end, StrategyKind::guess_g_cheater,
                 StrategyKind::corrupt_delete_retain, StrategyKind::scripted}) {
    EXPECT_EQ(strategy_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(strategy_kind_from_string("x"), std::invalid_argument);
  EXPECT_EQ(decode_value(encode_value(0xdeadbeef)), 0xdeadbeefu);
}

}  // namespace
}  // namespace sscd::harness
