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
#include <numbers>

#include "gtest/gtest.h"
#include "sscd/qsim.hpp"

namespace sscd::qsim {
namespace {

const gf::Field& F(std::uint32_t p, std::uint32_t k) { return gf::Field::get(p, k); }

QuditLayout one(const std::string& name, std::size_t count, const gf::Field& f) {
  return QuditLayout({{name, count, &f}});
}

DenseState random_state(const QuditLayout& layout, Rng& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> amps(layout.dimension());
  double norm = 0;
  for (auto& a : amps) {
    a = {g(rng), g(rng)};
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return DenseState(layout, amps);
}

TEST(QsimTest, QftOfZero) {
  auto s = qft_per_subfield(DenseState(one("x", 1, F(2, 1))), "x");
  EXPECT_NEAR(s.amplitudes()[0].real(), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(s.amplitudes()[1].real(), 1 / std::sqrt(2.0), 1e-12);
  auto s4 = qft_per_subfield(DenseState(one("x", 1, F(2, 2))), "x");
  for (auto a : s4.amplitudes()) EXPECT_NEAR(std::abs(a - Complex(0.5)), 0.0, 1e-12);
}

TEST(QsimTest, QftUnitarityAndInverse) {
  Rng rng(1);
  for (auto* f : {&F(2, 1), &F(3, 1), &F(2, 2), &F(3, 2), &F(5, 1)}) {
    auto s = random_state(one("x", 2, *f), rng);
    auto t = qft_per_subfield(s, "x");
    EXPECT_NEAR(t.norm(), 1.0, 1e-12);
    auto back = qft_per_subfield(t, "x", true);
    for (std::size_t i = 0; i < s.amplitudes().size(); ++i) {
      EXPECT_NEAR(std::abs(back.amplitudes()[i] - s.amplitudes()[i]), 0.0, 1e-12);
    }
    if (f->characteristic() == 2) {
      auto twice = qft_per_subfield(t, "x");
      for (std::size_t i = 0; i < s.amplitudes().size(); ++i) {
        EXPECT_NEAR(std::abs(twice.amplitudes()[i] - s.amplitudes()[i]), 0.0, 1e-12);
      }
    }
  }
}

TEST(QsimTest, QftMatchesCharacterFormula) {
  // <y| QFT |x> = q^{-1/2} w^{x.y} checked against a direct sum over GF(9).
  const auto& f = F(3, 2);
  for (Value x = 0; x < 9; ++x) {
    auto s = qft_per_subfield(DenseState::basis(one("x", 1, f), {{x}}), "x");
    for (Value y = 0; y < 9; ++y) {
      const double angle = 2 * std::numbers::pi * f.zp_dot(x, y) / 3.0;
      EXPECT_NEAR(std::abs(s.amplitudes()[y] - Complex(std::cos(angle), std::sin(angle)) / 3.0), 0.0, 1e-12);
    }
  }
}

TEST(QsimTest, GfFourQftEqualsHadamardOnEveryQubit) {
  Rng rng(2);
  auto s4 = random_state(one("x", 3, F(2, 2)), rng);
  DenseState s2(one("x", 6, F(2, 1)), s4.amplitudes());
  auto a = qft_per_subfield(s4, "x");
  auto b = qft_per_subfield(s2, "x");
  for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
    EXPECT_NEAR(std::abs(a.amplitudes()[i] - b.amplitudes()[i]), 0.0, 1e-12);
  }
}

TEST(QsimTest, MeasureBasisStateAndBornStatistics) {
  Rng rng(3);
  auto basis = DenseState::basis(one("x", 2, F(2, 2)), {{3, 1}});
  EXPECT_EQ(measure_computational(basis, "x", rng).outcome, (std::vector<Value>{3, 1}));

  auto uniform = qft_per_subfield(DenseState(one("x", 1, F(2, 2))), "x");
  std::vector<int> counts(4, 0);
  constexpr int kN = 10000;
  for (int i = 0; i < kN; ++i) counts[measure_computational(uniform, "x", rng).outcome[0]]++;
  const double sigma = std::sqrt(kN * 0.25 * 0.75);
  for (int c : counts) EXPECT_LT(std::abs(c - kN / 4.0), 4 * sigma);
}

DenseState copy_pair(const gf::Field& f) {
  QuditLayout l({{"a", 1, &f}, {"b", 1, &f}});
  auto s = qft_per_subfield(DenseState(l), "a", true);
  return copy_isometry(s, "a", "b", Basis::computational);
}

TEST(QsimTest, CopyPairCorrelations) {
  Rng rng(4);
  for (auto* f : {&F(2, 1), &F(3, 1), &F(2, 2)}) {
    auto pair = copy_pair(*f);
    for (int i = 0; i < 50; ++i) {
      auto m1 = measure_computational(pair, "a", rng);
      auto m2 = measure_computational(m1.collapsed, "b", rng);
      EXPECT_EQ(m1.outcome, m2.outcome);
    }
    // Fourier outcomes of the copy pair sum to zero: exhaustive over the
    // joint distribution after rotating both registers.
    auto rot = qft_per_subfield(qft_per_subfield(pair, "a", true), "b", true);
    const std::size_t q = f->order();
    for (Value x = 0; x < q; ++x) {
      for (Value y = 0; y < q; ++y) {
        const double p = std::norm(rot.amplitudes()[x * q + y]);
        if (f->add(x, y) == 0) {
          EXPECT_NEAR(p, 1.0 / q, 1e-12);
        } else {
          EXPECT_NEAR(p, 0.0, 1e-12);
        }
      }
    }
  }
}

TEST(QsimTest, FourierMeasurement) {
  Rng rng(5);
  const auto& f = F(3, 1);
  auto s = qft_per_subfield(DenseState::basis(one("x", 1, f), {{2}}), "x");
  for (int i = 0; i < 20; ++i) EXPECT_EQ(measure_fourier(s, "x", rng).outcome[0], 2u);
  auto comp = DenseState::basis(one("x", 1, F(2, 1)), {{1}});
  auto probs = outcome_probabilities(qft_per_subfield(comp, "x", true), "x");
  EXPECT_NEAR(probs[0], 0.5, 1e-12);
  EXPECT_NEAR(probs[1], 0.5, 1e-12);
}

TEST(QsimTest, CopyIsometries) {
  const auto& f = F(2, 2);
  QuditLayout l({{"a", 2, &f}, {"b", 2, &f}});
  auto s = copy_isometry(DenseState::basis(l, {{2, 3}, {0, 0}}), "a", "b", Basis::computational);
  Rng rng(6);
  EXPECT_EQ(measure_computational(s, "b", rng).outcome, (std::vector<Value>{2, 3}));
  EXPECT_THROW(copy_isometry(DenseState::basis(l, {{2, 3}, {1, 0}}), "a", "b", Basis::computational),
               std::invalid_argument);

  // Fourier copy of QFT|r>.
  auto fr = qft_per_subfield(DenseState::basis(l, {{1, 2}, {0, 0}}), "a");
  auto fc = copy_isometry(fr, "a", "b", Basis::fourier);
  auto ma = measure_fourier(fc, "a", rng);
  auto mb = measure_fourier(ma.collapsed, "b", rng);
  EXPECT_EQ(ma.outcome, (std::vector<Value>{1, 2}));
  EXPECT_EQ(mb.outcome, (std::vector<Value>{1, 2}));
}

TEST(QsimTest, LinearMap) {
  const auto& f2 = F(2, 1);
  QuditLayout l({{"x", 3, &f2}, {"y", 1, &f2}});
  gf::FieldMatrix ones(f2, 1, 3, {1, 1, 1});
  auto s = apply_linear_map(DenseState::basis(l, {{1, 0, 1}, {0}}), ones, "x", "y");
  Rng rng(7);
  EXPECT_EQ(measure_computational(s, "y", rng).outcome, (std::vector<Value>{0}));

  const auto& f8 = F(2, 3);
  gf::FieldMatrix r(f8, 2, 2, {3, 5, 7, 1});
  QuditLayout l8({{"x", 2, &f8}, {"y", 2, &f8}});
  for (Value a = 0; a < 8; ++a) {
    for (Value b = 0; b < 8; ++b) {
      auto out = apply_linear_map(DenseState::basis(l8, {{a, b}, {0, 0}}), r, "x", "y");
      const std::vector<Value> x{a, b};
      EXPECT_EQ(measure_computational(out, "y", rng).outcome, r.apply(x));
    }
  }
  // Identity matrix agrees with the copy isometry.
  Rng rng2(8);
  auto st = random_state(QuditLayout({{"x", 2, &f8}}), rng2).with_register("y", 2, f8);
  auto c1 = copy_isometry(st, "x", "y", Basis::computational);
  auto c2 = apply_linear_map(st, gf::FieldMatrix::identity(f8, 2), "x", "y");
  EXPECT_EQ(c1.amplitudes(), c2.amplitudes());
}

TEST(QsimTest, PartialTrace) {
  Rng rng(9);
  const auto& f = F(2, 1);
  auto pair = copy_pair(f);
  auto rho = partial_trace(pair, {"a"});
  EXPECT_NEAR(rho.at(0, 0).real(), 0.5, 1e-12);
  EXPECT_NEAR(rho.at(1, 1).real(), 0.5, 1e-12);
  EXPECT_NEAR(std::abs(rho.at(0, 1)), 0.0, 1e-12);

  // Product state: reduced state is the pure kept factor.
  auto psi = random_state(one("a", 1, F(3, 1)), rng);
  auto prod = psi.with_register("b", 1, f);
  auto reduced = partial_trace(prod, {"a"});
  EXPECT_NEAR(trace_distance(reduced, DensityMatrix::pure(psi)), 0.0, 1e-12);

  for (int i = 0; i < 10; ++i) {
    auto s = random_state(QuditLayout({{"a", 1, &F(3, 1)}, {"b", 2, &f}, {"c", 1, &F(2, 2)}}), rng);
    auto r1 = partial_trace(s, {"a", "c"});
    EXPECT_NEAR(std::abs(r1.trace() - Complex(1.0)), 0.0, 1e-12);
    EXPECT_TRUE(r1.is_valid());
    // Tracing in two steps agrees with tracing at once.
    auto r2 = partial_trace(DensityMatrix::pure(s), {"a", "c"});
    EXPECT_NEAR(trace_distance(r1, r2), 0.0, 1e-12);
    auto r3 = partial_trace(partial_trace(s, {"a", "b"}), {"a"});
    EXPECT_NEAR(trace_distance(r3, partial_trace(s, {"a"})), 0.0, 1e-12);
  }
  EXPECT_THROW(partial_trace(pair, {"zz"}), std::invalid_argument);
  EXPECT_THROW(partial_trace(pair, {}), std::invalid_argument);
}

TEST(QsimTest, TraceDistance) {
  const auto& f = F(2, 1);
  auto zero = DensityMatrix::pure(DenseState::basis(one("x", 1, f), {{0}}));
  auto onev = DensityMatrix::pure(DenseState::basis(one("x", 1, f), {{1}}));
  auto plus = DensityMatrix::pure(qft_per_subfield(DenseState(one("x", 1, f)), "x"));
  EXPECT_NEAR(trace_distance(zero, zero), 0.0, 1e-12);
  EXPECT_NEAR(trace_distance(zero, onev), 1.0, 1e-12);
  // Eigenvalues of |0><0| - |+><+| are +-1/sqrt(2).
  EXPECT_NEAR(trace_distance(zero, plus), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(trace_distance(plus, zero), trace_distance(zero, plus), 1e-15);
  auto other = DensityMatrix::pure(DenseState(one("y", 1, f)));
  EXPECT_THROW(trace_distance(zero, other), std::invalid_argument);
}

TEST(QsimTest, ProductShareMeasurementAndEmbedding) {
  Rng rng(10);
  const auto& f = F(2, 2);
  ProductShare share(f, {{Basis::computational, 2}, {Basis::fourier, 3}, {Basis::computational, 1}});
  auto dense = DenseState::from_product(share, "s");
  EXPECT_NEAR(dense.norm(), 1.0, 1e-12);
  auto comp = measure_computational(dense, "s", rng);
  EXPECT_EQ(comp.outcome[0], 2u);
  EXPECT_EQ(comp.outcome[2], 1u);
  ProductShare all_fourier(f, {{Basis::fourier, 1}, {Basis::fourier, 3}});
  auto df = DenseState::from_product(all_fourier, "s");
  EXPECT_EQ(measure_fourier(df, "s", rng).outcome, (std::vector<Value>{1, 3}));

  auto copy = share;
  EXPECT_EQ(copy.measure(0, Basis::computational, rng), 2u);
  EXPECT_EQ(copy.measure(1, Basis::fourier, rng), 3u);
  copy.measure(0, Basis::fourier, rng);
  EXPECT_EQ(copy[0].basis, Basis::fourier);
}

TEST(QsimTest, DeletionPredicateNamedCases) {
  Rng rng(11);
  const auto& f = F(2, 2);
  const std::vector<Value> cert{1, 2, 3};
  ProductShare enc(f, {{Basis::fourier, 1}, {Basis::fourier, 2}, {Basis::fourier, 3}});
  auto s = DenseState::from_product(enc, "c");
  auto res = deletion_predicate(s, "c", cert, 2, rng);
  EXPECT_TRUE(res.accept);
  EXPECT_NEAR(res.accept_probability, 1.0, 1e-12);

  ProductShare far(f, {{Basis::fourier, 0}, {Basis::fourier, 2}, {Basis::fourier, 3}});
  EXPECT_NEAR(deletion_predicate_probability(DenseState::from_product(far, "c"), "c", cert, 2), 0.0, 1e-12);
  // One deviation is allowed once ell > 2.
  EXPECT_NEAR(deletion_predicate_probability(DenseState::from_product(far, "c"), "c", cert, 3), 1.0, 1e-12);

  // Uniform state over two GF(2) qudits, ell = 2: only the exact Fourier
  // vector qualifies, so acceptance is 1/4.
  auto uni = qft_per_subfield(DenseState(one("c", 2, F(2, 1))), "c", true);
  auto basis0 = DenseState(one("c", 2, F(2, 1)));
  EXPECT_NEAR(deletion_predicate_probability(basis0, "c", std::vector<Value>{0, 1}, 2), 0.25, 1e-12);
  EXPECT_NEAR(deletion_predicate_probability(uni, "c", std::vector<Value>{0, 0}, 2), 1.0, 1e-12);
  EXPECT_THROW(deletion_predicate_probability(uni, "c", std::vector<Value>{0}, 2), std::invalid_argument);
}

// Projector built explicitly as sum of |F v><F v| over accepted v.
TEST(QsimTest, DeletionPredicateMatchesExplicitProjector) {
  Rng rng(12);
  for (std::size_t tp = 1; tp <= 3; ++tp) {
    const auto& f = F(2, 2);
    auto layout = QuditLayout({{"c", tp, &f}});
    for (int trial = 0; trial < 5; ++trial) {
      auto s = random_state(layout, rng);
      std::vector<Value> cert(tp);
      for (auto& c : cert) c = static_cast<Value>(uniform_below(rng, 4));
      for (std::size_t ell = 1; ell <= 2 * tp + 1; ++ell) {
        double p = 0;
        for (std::size_t idx = 0; idx < layout.dimension(); ++idx) {
          auto basis = DenseState::basis(layout, {DenseState(layout).register_values(idx, "c")});
          auto v = basis.register_values(idx, "c");
          std::size_t dist = 0;
          for (std::size_t j = 0; j < tp; ++j) dist += v[j] != cert[j];
          if (2 * dist >= ell) continue;
          auto fv = qft_per_subfield(basis, "c");
          Complex overlap = 0;
          for (std::size_t i = 0; i < fv.amplitudes().size(); ++i) {
            overlap += std::conj(fv.amplitudes()[i]) * s.amplitudes()[i];
          }
          p += std::norm(overlap);
        }
        EXPECT_NEAR(deletion_predicate_probability(s, "c", cert, ell), p, 1e-12);
        auto res = deletion_predicate(s, "c", cert, ell, rng);
        EXPECT_NEAR(res.accept_probability, p, 1e-12);
        EXPECT_NEAR(res.collapsed.norm(), 1.0, 1e-9);
      }
    }
  }
}

TEST(QsimTest, DenseCap) {
  const auto& f = F(2, 8);
  EXPECT_THROW(QuditLayout({{"x", 3, &f}}, 1 << 20), std::length_error);
  EXPECT_NO_THROW(QuditLayout({{"x", 2, &f}}, 1 << 20));
}

}  // namespace
}  // namespace sscd::qsim
