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

#include <random>

#include "gtest/gtest.h"
#include "sscd/gf.hpp"

namespace sscd::gf {
namespace {

// Test-local oracle: multiply coefficient vectors over Z_p and reduce by the
// modulus, written independently of Field::mul_by_reduction.
Value oracle_mul(const Field& f, Value a, Value b) {
  const std::uint32_t p = f.characteristic(), k = f.degree();
  std::vector<std::int64_t> ca(k), cb(k), prod(2 * k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    ca[i] = a % p;
    a /= p;
    cb[i] = b % p;
    b /= p;
  }
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) prod[i + j] += ca[i] * cb[j];
  const auto& mod = f.modulus();
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    const std::int64_t c = prod[d] % p;
    for (std::uint32_t i = 0; i <= k; ++i) prod[d - k + i] -= c * mod[i];
  }
  Value out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    out += static_cast<Value>(((prod[i] % p) + p) % p) * scale;
    scale *= p;
  }
  return out;
}

TEST(FieldTest, Gf4ProductMatchesOracle) {
  const Field& f = Field::get(2, 2);
  ASSERT_EQ(f.modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(oracle_mul(f, 2, 3), 1u);
  EXPECT_EQ(field_mul(FieldElem(f, 2), FieldElem(f, 3)).value(), 1u);
}

TEST(FieldTest, MultiplicationTableMatchesOracleExhaustively) {
  for (auto [p, k] : {std::pair{2u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 1u}, {3u, 2u}, {5u, 2u}, {2u, 6u}}) {
    const Field& f = Field::get(p, k);
    for (Value a = 0; a < f.order(); ++a)
      for (Value b = 0; b < f.order(); ++b) ASSERT_EQ(f.mul(a, b), oracle_mul(f, a, b)) << f.name();
  }
}

TEST(FieldTest, IdentityAndAbsorbing) {
  const Field& f = Field::get(2, 6);
  for (Value a = 0; a < f.order(); ++a) {
    EXPECT_EQ(f.mul(a, 1), a);
    EXPECT_EQ(f.mul(a, 0), 0u);
  }
}

TEST(FieldTest, InverseByExhaustiveSearch) {
  const Field& f = Field::get(2, 2);
  Value found = 0;
  for (Value b = 0; b < 4; ++b)
    if (oracle_mul(f, 2, b) == 1) found = b;
  EXPECT_EQ(found, 3u);
  EXPECT_EQ(field_inv(FieldElem(f, 2)).value(), 3u);
  EXPECT_EQ(field_inv(FieldElem::one(f)).value(), 1u);
  EXPECT_THROW(field_inv(FieldElem::zero(f)), std::domain_error);
}

TEST(FieldTest, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {2u, 3u}, {2u, 6u}, {3u, 3u}}) {
    const Field& f = Field::get(p, k);
    std::uniform_int_distribution<Value> d(0, f.order() - 1);
    for (int t = 0; t < 500; ++t) {
      FieldElem a(f, d(rng)), b(f, d(rng)), c(f, d(rng));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a - a, FieldElem::zero(f));
      if (!a.is_zero()) EXPECT_EQ(a * field_inv(a), FieldElem::one(f));
    }
  }
}

TEST(FieldTest, ModulusIsIrreducibleAndCanonical) {
  EXPECT_TRUE(is_irreducible(2, std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_FALSE(is_irreducible(2, std::vector<std::uint32_t>{1, 0, 1}));  // (x+1)^2
  EXPECT_THROW(Field::with_modulus(2, {1, 0, 1}), std::invalid_argument);
  // The shipped binary table agrees with a fresh search.
  for (std::uint32_t k = 1; k <= 12; ++k) {
    const auto m = canonical_modulus(2, k);
    EXPECT_TRUE(is_irreducible(2, m));
    // No smaller low part is irreducible.
    const std::uint32_t packed = [&] {
      std::uint32_t v = 0;
      for (std::uint32_t i = 0; i < k; ++i) v |= m[i] << i;
      return v;
    }();
    for (std::uint32_t low = 0; low < packed; ++low) {
      std::vector<std::uint32_t> c(k + 1);
      for (std::uint32_t i = 0; i < k; ++i) c[i] = (low >> i) & 1u;
      c[k] = 1;
      EXPECT_FALSE(is_irreducible(2, c)) << k;
    }
  }
  EXPECT_EQ(Field::get(2, 8).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1, 1, 0, 0, 0, 1}));
}

TEST(FieldTest, InterningAndMismatch) {
  EXPECT_EQ(&Field::get(2, 3), &Field::get(2, 3));
  EXPECT_EQ(&Field::parse("2^3"), &Field::get(2, 3));
  EXPECT_EQ(&Field::parse("GF(8)"), &Field::get(2, 3));
  EXPECT_EQ(&Field::parse("9"), &Field::get(3, 2));
  EXPECT_THROW(Field::parse("6"), std::invalid_argument);
  EXPECT_THROW(FieldElem(Field::get(2, 2), 1) * FieldElem(Field::get(2, 3), 1), FieldMismatch);
  EXPECT_THROW(FieldElem(Field::get(2, 2), 4), std::out_of_range);
}

TEST(FieldTest, CoefficientViewRoundTrip) {
  const Field& f = Field::get(3, 3);
  for (Value v = 0; v < f.order(); ++v) EXPECT_EQ(f.from_coeffs(f.coeffs(v)), v);
  EXPECT_EQ(f.coeffs(5), (std::vector<std::uint32_t>{2, 1, 0}));
  EXPECT_EQ(f.zp_dot(5, 5), (4u + 1u) % 3u);
}

TEST(PolynomialTest, Evaluation) {
  const Field& f8 = Field::get(2, 3);
  EXPECT_EQ(poly_eval(Polynomial::constant(f8, 6), FieldElem(f8, 3)).value(), 6u);
  const Polynomial id(f8, {0, 1});
  EXPECT_EQ(poly_eval(id, FieldElem(f8, 5)).value(), 5u);
  // x^2 + 1 over GF(4) at 2, term by term.
  const Field& f4 = Field::get(2, 2);
  const Value expected = oracle_mul(f4, 2, 2) ^ 1u;
  EXPECT_EQ(Polynomial(f4, {1, 0, 1}).eval(2), expected);
  EXPECT_EQ(expected, 2u);  // x^2 = x + 1, plus 1 gives x
}

TEST(PolynomialTest, DivmodReconstructs) {
  std::mt19937_64 rng(3);
  const Field& f = Field::get(3, 2);
  std::uniform_int_distribution<Value> d(0, f.order() - 1);
  for (int t = 0; t < 100; ++t) {
    std::vector<Value> a(7), b(3);
    for (auto& c : a) c = d(rng);
    for (auto& c : b) c = d(rng);
    b.back() = 1;
    Polynomial pa(f, a), pb(f, b);
    auto [q, r] = pa.divmod(pb);
    EXPECT_EQ(q * pb + r, pa);
    EXPECT_LT(r.degree(), pb.degree());
  }
  EXPECT_THROW(Polynomial(f, {1}).divmod(Polynomial(f)), std::domain_error);
}

TEST(InterpolationTest, NamedCases) {
  const Field& f = Field::get(2, 3);
  std::vector<Value> one{1}, two_three{2, 3};
  auto r = interpolation_matrix(f, 0, one, two_three);
  EXPECT_EQ(r.rows(), 2u);
  EXPECT_EQ(r.at(0, 0), 1u);
  EXPECT_EQ(r.at(1, 0), 1u);

  std::vector<Value> src{1, 2}, tgt{1};
  auto r2 = interpolation_matrix(f, 1, src, tgt);
  EXPECT_EQ(r2.at(0, 0), 1u);
  EXPECT_EQ(r2.at(0, 1), 0u);

  std::vector<Value> dup{1, 1};
  EXPECT_THROW(interpolation_matrix(f, 1, dup, tgt), std::invalid_argument);
  EXPECT_THROW(interpolation_matrix(f, 2, src, tgt), std::invalid_argument);
}

TEST(InterpolationTest, ComposesWithEvaluation) {
  std::mt19937_64 rng(11);
  const Field& f = Field::get(2, 3);
  std::uniform_int_distribution<Value> d(0, 7);
  std::vector<Value> src{1, 2}, tgt{3};
  auto r = interpolation_matrix(f, 1, src, tgt);
  for (int t = 0; t < 50; ++t) {
    Polynomial p(f, {d(rng), d(rng)});
    std::vector<Value> ev{p.eval(1), p.eval(2)};
    EXPECT_EQ(r.apply(ev)[0], p.eval(3));
  }
  // Larger: degree 3 from 4 points onto 5 targets over GF(64).
  const Field& g = Field::get(2, 6);
  std::uniform_int_distribution<Value> dg(0, 63);
  std::vector<Value> s4{5, 9, 17, 33}, t5{1, 2, 3, 4, 60};
  auto r4 = interpolation_matrix(g, 3, s4, t5);
  for (int t = 0; t < 50; ++t) {
    Polynomial p(g, {dg(rng), dg(rng), dg(rng), dg(rng)});
    std::vector<Value> ev;
    for (auto x : s4) ev.push_back(p.eval(x));
    auto out = r4.apply(ev);
    for (std::size_t i = 0; i < t5.size(); ++i) EXPECT_EQ(out[i], p.eval(t5[i]));
  }
}

TEST(ColumnIndependenceTest, NamedCases) {
  const Field& f2 = Field::get(2, 1);
  FieldMatrix ones(f2, 1, 5, {1, 1, 1, 1, 1});
  EXPECT_TRUE(check_column_independence(ones, 1));
  FieldMatrix with_zero(f2, 2, 3, {1, 0, 1, 0, 0, 1});
  EXPECT_FALSE(check_column_independence(with_zero, 1));
  EXPECT_THROW(check_column_independence(ones, 6), std::invalid_argument);
  // Repeated columns fail for m = 2.
  FieldMatrix rep(f2, 2, 3, {1, 1, 0, 0, 0, 1});
  EXPECT_FALSE(check_column_independence(rep, 2));
}

TEST(ColumnIndependenceTest, InterpolationMatricesAreMds) {
  const Field& f = Field::get(2, 3);
  std::vector<Value> src{1, 2, 3}, tgt{4, 5, 6, 7, 0};
  auto r = interpolation_matrix(f, 2, src, tgt);
  EXPECT_TRUE(check_column_independence(r, 3));
  EXPECT_TRUE(check_column_independence(FieldMatrix::identity(f, 2), 2));
  // More columns than rows cannot be independent.
  FieldMatrix wide(f, 2, 3, {1, 0, 1, 0, 1, 1});
  EXPECT_FALSE(check_column_independence(wide, 3));
}

std::optional<Polynomial> brute_force_decode_deg1(const Field& f, std::span<const EvalPoint> pts,
                                                  std::size_t max_err) {
  std::optional<Polynomial> best;
  std::size_t best_err = pts.size() + 1;
  for (Value a = 0; a < f.order(); ++a) {
    for (Value b = 0; b < f.order(); ++b) {
      std::size_t err = 0;
      for (const auto& pt : pts) err += f.add(a, f.mul(b, pt.x)) != pt.y;
      if (err < best_err) {
        best_err = err;
        best = Polynomial(f, {a, b});
      }
    }
  }
  if (best_err > max_err) return std::nullopt;
  return best;
}

TEST(ReedSolomonTest, NamedCases) {
  const Field& f = Field::get(2, 3);
  std::vector<EvalPoint> pts;
  for (Value x = 1; x <= 5; ++x) pts.push_back({x, x});
  pts[2].y = 0;
  auto oracle = brute_force_decode_deg1(f, pts, 1);
  ASSERT_TRUE(oracle.has_value());
  EXPECT_EQ(*oracle, Polynomial(f, {0, 1}));
  auto got = rs_correct(f, 1, pts);
  ASSERT_TRUE(got.has_value());
  EXPECT_EQ(*got, *oracle);
  EXPECT_EQ(*rs_correct_berlekamp_welch(f, 1, pts), *oracle);

  // Exact interpolation with no redundancy.
  std::vector<EvalPoint> exact{{1, 3}, {2, 5}, {4, 6}};
  auto p = rs_correct(f, 2, exact);
  ASSERT_TRUE(p.has_value());
  for (const auto& pt : exact) EXPECT_EQ(p->eval(pt.x), pt.y);

  // Constant: majority forced.
  std::vector<EvalPoint> maj{{1, 4}, {2, 6}, {3, 6}};
  EXPECT_EQ(*rs_correct(f, 0, maj), Polynomial::constant(f, 6));

  std::vector<EvalPoint> dup{{1, 1}, {1, 2}};
  EXPECT_THROW(rs_correct(f, 0, dup), std::invalid_argument);
  EXPECT_THROW(rs_correct(f, 3, maj), std::invalid_argument);
}

TEST(ReedSolomonTest, GaoAndBerlekampWelchAgreeWithBruteForce) {
  std::mt19937_64 rng(5);
  const Field& f = Field::get(2, 3);
  std::uniform_int_distribution<Value> d(0, 7);
  for (int t = 0; t < 300; ++t) {
    std::vector<EvalPoint> pts;
    for (Value x = 0; x < 7; ++x) pts.push_back({x, d(rng)});
    // Up to three errors on seven points relative to a random line.
    auto gao = rs_correct(f, 1, pts);
    auto bw = rs_correct_berlekamp_welch(f, 1, pts);
    auto brute = brute_force_decode_deg1(f, pts, 2);
    EXPECT_EQ(gao.has_value(), brute.has_value());
    EXPECT_EQ(bw.has_value(), brute.has_value());
    if (gao && brute) EXPECT_EQ(*gao, *brute);
    if (bw && brute) EXPECT_EQ(*bw, *brute);
  }
}

TEST(ReedSolomonTest, RandomCorrectionWithinRadius) {
  std::mt19937_64 rng(17);
  const Field& f = Field::get(2, 6);
  std::uniform_int_distribution<Value> d(0, 63);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t deg = rng() % 8;
    const std::size_t s = deg + 1 + rng() % 20;
    std::vector<Value> coeffs(deg + 1);
    for (auto& c : coeffs) c = d(rng);
    Polynomial poly(f, coeffs);
    std::vector<Value> xs(63);
    for (Value i = 0; i < 63; ++i) xs[i] = i + 1;
    std::shuffle(xs.begin(), xs.end(), rng);
    std::vector<EvalPoint> pts;
    for (std::size_t i = 0; i < s; ++i) pts.push_back({xs[i], poly.eval(xs[i])});
    const std::size_t radius = (s - deg - 1) / 2;
    const std::size_t e = radius == 0 ? 0 : rng() % (radius + 1);
    for (std::size_t i = 0; i < e; ++i) pts[i].y ^= 1 + rng() % 63;
    auto got = rs_correct(f, deg, pts);
    ASSERT_TRUE(got.has_value());
    EXPECT_TRUE(*got == poly || (poly.is_zero() && got->is_zero()));
  }
}

}  // namespace
}  // namespace sscd::gf
