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
#include "sscd/extractor.hpp"

namespace sscd::extractor {
namespace {

const gf::Field& f2() { return gf::Field::get(2, 1); }

TEST(ExtractorTest, SourceCounting) {
  auto inst = ExtractorInstance::make(gf::FieldMatrix(f2(), 1, 5, {1, 1, 1, 1, 1}));
  EXPECT_EQ(source_terms(inst).size(), 6u);
  auto forced = ExtractorInstance::make(gf::FieldMatrix(f2(), 1, 3, {1, 1, 1}));
  EXPECT_EQ(source_terms(forced).size(), 1u);
}

TEST(ExtractorTest, StateNormalized) {
  Rng rng(1);
  for (const auto& e : theorem_grid()) {
    if (e.route == Route::fused) continue;
    auto s = sample_source_state(e.instance, rng);
    EXPECT_NEAR(s.norm(), 1.0, 1e-12) << e.name;
  }
}

TEST(ExtractorTest, XorOfUniformBits) {
  Rng rng(2);
  auto inst = ExtractorInstance::make(gf::FieldMatrix(f2(), 1, 3, {1, 1, 1}));
  inst.w = {1, 0, 1};
  auto s = sample_source_state(inst, rng);
  auto rho = run_extractor(inst, s, Route::dense);
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
  EXPECT_LT(qsim::trace_distance(rho, ideal_output(inst, s)), 1e-12);
  // |psi_0><psi_0| (x) diag(1/2, 1/2): the Y-off-diagonal blocks vanish
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) EXPECT_NEAR(std::abs(rho.at(2 * a, 2 * b + 1)), 0.0, 1e-12);
}

TEST(ExtractorTest, Gf4MarginalUniform) {
  Rng rng(3);
  const auto grid = theorem_grid();
  const auto& inst = grid[3].instance;
  auto s = sample_source_state(inst, rng);
  auto rho = run_extractor(inst, s);
  for (std::size_t y = 0; y < 4; ++y) {
    double p = 0;
    for (std::size_t a = 0; a < inst.side_dim; ++a) p += rho.at(a * 4 + y, a * 4 + y).real();
    EXPECT_NEAR(p, 0.25, 1e-9);
  }
}

TEST(ExtractorTest, RoutesAgree) {
  Rng rng(4);
  for (const auto& e : theorem_grid()) {
    if (e.route == Route::fused) continue;
    auto s = sample_source_state(e.instance, rng);
    auto dense = run_extractor(e.instance, s, Route::dense);
    EXPECT_LT(qsim::trace_distance(dense, run_extractor(e.instance, s, Route::fused)), 1e-12) << e.name;
    EXPECT_LT(qsim::trace_distance(dense, run_extractor(e.instance, s, Route::dense_qubits)), 1e-12) << e.name;
  }
}

TEST(ExtractorTest, GridSatisfiesHypotheses) {
  for (const auto& e : theorem_grid()) EXPECT_EQ(check_instance(e.instance), "") << e.name;
  EXPECT_NE(check_instance(repeated_column_control()), "");
  EXPECT_NE(check_instance(weight_boundary_control()), "");
}

TEST(ExtractorTest, TheoremOnSmallInstances) {
  Rng rng(5);
  for (const auto& e : theorem_grid()) {
    if (e.route == Route::fused) continue;
    EXPECT_LE(verify_theorem(e.instance, 5, rng, e.route), 1e-9) << e.name;
  }
}

TEST(ExtractorTest, NegativeControls) {
  EXPECT_GE(search_nonuniform_source(repeated_column_control()).distance, 0.1);
  EXPECT_GT(search_nonuniform_source(weight_boundary_control()).distance, 1e-3);
}

TEST(ExtractorTest, SumRoots) {
  EXPECT_LT(verify_sum_roots(2), 1e-15);
  EXPECT_LT(verify_sum_roots(4), 1e-15);
  for (std::size_t n = 2; n <= 16; ++n) EXPECT_LT(verify_sum_roots(n), 1e-12);
  EXPECT_THROW(verify_sum_roots(1), std::invalid_argument);
}

TEST(ExtractorTest, SubclaimExamples) {
  gf::FieldMatrix r(f2(), 1, 2, {1, 1});
  EXPECT_LT(verify_subclaim(r, {1, 0}, {0}, {1}), 1e-12);
  EXPECT_NEAR(subclaim_sum(r, {0, 0}, {0}), 2.0, 1e-12);
  EXPECT_THROW(verify_subclaim(r, {0, 0}, {0}, {1}), std::invalid_argument);
  EXPECT_THROW(verify_subclaim(r, {1, 0}, {0}, {0}), std::invalid_argument);
}

TEST(ExtractorTest, SubclaimRandomCases) {
  Rng rng(6);
  for (const auto* f : {&gf::Field::get(2, 1), &gf::Field::get(3, 1), &gf::Field::get(2, 2)}) {
    for (int i = 0; i < 100; ++i) {
      auto c = random_subclaim_case(*f, 1, 3, rng);
      ASSERT_LT(verify_subclaim(c.R, c.u, c.y, c.J), 1e-10);
    }
  }
}

}  // namespace
}  // namespace sscd::extractor
