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

#include "sscd/extractor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace sscd::extractor {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

std::size_t log2_exact(std::size_t d) {
  if (d < 2 || (d & (d - 1)) != 0) throw std::invalid_argument("side dimension must be a power of two >= 2");
  return static_cast<std::size_t>(std::countr_zero(d));
}

std::size_t encode(const std::vector<Value>& v, std::size_t q) {
  std::size_t idx = 0;
  for (auto x : v) idx = idx * q + x;
  return idx;
}

std::vector<Value> decode(std::size_t idx, std::size_t count, std::size_t q) {
  std::vector<Value> v(count);
  for (std::size_t j = count; j-- > 0;) {
    v[j] = static_cast<Value>(idx % q);
    idx /= q;
  }
  return v;
}

void require_layout(const ExtractorInstance& inst, const qsim::DenseState& s) {
  if (!(s.layout() == source_layout(inst))) throw std::invalid_argument("state layout does not match the instance");
}

qsim::DensityMatrix run_fused(const ExtractorInstance& inst, const qsim::DenseState& s) {
  const gf::Field& F = *inst.field;
  const std::size_t q = F.order();
  const std::size_t dx = ipow(q, inst.M);
  const std::size_t dy = ipow(q, inst.m);
  const std::size_t da = inst.side_dim;
  const auto t = qsim::qft_per_subfield(s, "X");
  const auto& amps = t.amplitudes();
  const std::size_t d = da * dy;
  std::vector<Complex> rho(d * d, 0.0);
  std::vector<Complex> phi(da);
  for (std::size_t x = 0; x < dx; ++x) {
    bool any = false;
    for (std::size_t a = 0; a < da; ++a) {
      phi[a] = amps[a * dx + x];
      any |= std::norm(phi[a]) > 0;
    }
    if (!any) continue;
    const std::size_t y = encode(inst.R.apply(decode(x, inst.M, q)), q);
    for (std::size_t a = 0; a < da; ++a)
      for (std::size_t b = 0; b < da; ++b) rho[(a * dy + y) * d + b * dy + y] += phi[a] * std::conj(phi[b]);
  }
  return qsim::DensityMatrix(output_layout(inst), std::move(rho));
}

qsim::DenseState qft_as_qudits(const ExtractorInstance& inst, const qsim::DenseState& s) {
  const gf::Field& F = *inst.field;
  const gf::Field& Zp = gf::Field::get(F.characteristic(), 1);
  qsim::QuditLayout flat({{"A", log2_exact(inst.side_dim), &gf::Field::get(2, 1)},
                          {"X", inst.M * F.degree(), &Zp}},
                         s.layout().cap());
  qsim::DenseState view(flat, s.amplitudes(), 1e-9);
  view = qsim::qft_per_subfield(view, "X");
  return qsim::DenseState(s.layout(), view.amplitudes(), 1e-9);
}

}  // namespace

ExtractorInstance ExtractorInstance::make(const gf::FieldMatrix& R, std::size_t side_dim) {
  ExtractorInstance inst;
  inst.field = &R.field();
  inst.M = R.cols();
  inst.m = R.rows();
  inst.R = R;
  inst.w.assign(inst.M, 0);
  inst.weight_bound = inst.M > inst.m ? (inst.M - inst.m + 1) / 2 : 0;
  inst.side_dim = side_dim;
  return inst;
}

std::string check_instance(const ExtractorInstance& inst) {
  if (!inst.field || &inst.R.field() != inst.field) return "matrix field differs from the instance field";
  if (inst.R.rows() != inst.m || inst.R.cols() != inst.M) return "matrix shape is not m x M";
  if (inst.w.size() != inst.M) return "offset length is not M";
  for (auto v : inst.w)
    if (!inst.field->contains(v)) return "offset entry outside the field";
  if (inst.side_dim < 2 || (inst.side_dim & (inst.side_dim - 1)) != 0) return "side dimension not a power of two";
  if (inst.weight_bound == 0) return "no admissible source (need M - m >= 1)";
  if (2 * (inst.weight_bound - 1) >= inst.M - inst.m) return "weight bound admits h(u) >= (M - m)/2";
  if (!gf::check_column_independence(inst.R, inst.m)) return "some m columns of R are dependent";
  return {};
}

std::vector<std::vector<Value>> source_terms(const ExtractorInstance& inst) {
  const std::size_t q = inst.field->order();
  std::vector<std::vector<Value>> out;
  const std::size_t total = ipow(q, inst.M);
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto u = decode(idx, inst.M, q);
    if (gf::hamming_weight(u) < inst.weight_bound) out.push_back(std::move(u));
  }
  return out;
}

qsim::QuditLayout source_layout(const ExtractorInstance& inst) {
  return qsim::QuditLayout(
      {{"A", log2_exact(inst.side_dim), &gf::Field::get(2, 1)}, {"X", inst.M, inst.field}});
}

qsim::QuditLayout output_layout(const ExtractorInstance& inst) {
  return qsim::QuditLayout(
      {{"A", log2_exact(inst.side_dim), &gf::Field::get(2, 1)}, {"Y", inst.m, inst.field}});
}

qsim::DenseState source_state(const ExtractorInstance& inst, const std::vector<std::vector<Complex>>& sides) {
  const auto terms = source_terms(inst);
  if (sides.size() != terms.size()) throw std::invalid_argument("one side vector per source term expected");
  const gf::Field& F = *inst.field;
  const std::size_t q = F.order();
  const std::size_t dx = ipow(q, inst.M);
  qsim::QuditLayout layout = source_layout(inst);
  std::vector<Complex> amps(layout.dimension(), 0.0);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (sides[t].size() != inst.side_dim) throw std::invalid_argument("side vector has the wrong dimension");
    std::vector<Value> x(inst.M);
    for (std::size_t i = 0; i < inst.M; ++i) x[i] = F.add(terms[t][i], inst.w[i]);
    const std::size_t xi = encode(x, q);
    for (std::size_t a = 0; a < inst.side_dim; ++a) amps[a * dx + xi] += sides[t][a];
  }
  double norm2 = 0;
  for (const auto& c : amps) norm2 += std::norm(c);
  if (norm2 == 0) throw std::invalid_argument("source state is zero");
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& c : amps) c *= scale;
  return qsim::DenseState(std::move(layout), std::move(amps));
}

qsim::DenseState sample_source_state(const ExtractorInstance& inst, Rng& rng) {
  const std::size_t count = source_terms(inst).size();
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<std::vector<Complex>> sides(count, std::vector<Complex>(inst.side_dim));
  for (auto& v : sides)
    for (auto& c : v) c = Complex(g(rng), g(rng));
  return source_state(inst, sides);
}

qsim::DensityMatrix run_extractor(const ExtractorInstance& inst, const qsim::DenseState& state, Route route) {
  require_layout(inst, state);
  const std::size_t full = state.layout().dimension() * ipow(inst.field->order(), inst.m);
  if (route == Route::automatic) route = full <= state.layout().cap() ? Route::dense : Route::fused;
  if (route == Route::fused) return run_fused(inst, state);

  qsim::DenseState s = route == Route::dense_qubits ? qft_as_qudits(inst, state) : qsim::qft_per_subfield(state, "X");
  s = s.with_register("Y", inst.m, *inst.field);
  s = qsim::apply_linear_map(s, inst.R, "X", "Y");
  return qsim::partial_trace(s, {"A", "Y"});
}

qsim::DensityMatrix ideal_output(const ExtractorInstance& inst, const qsim::DenseState& state) {
  require_layout(inst, state);
  return qsim::partial_trace(state, {"A"}).tensor(
      qsim::DensityMatrix::maximally_mixed(qsim::QuditLayout({{"Y", inst.m, inst.field}})));
}

double verify_theorem(const ExtractorInstance& inst, std::size_t trials, Rng& rng, Route route) {
  if (auto why = check_instance(inst); !why.empty()) throw std::invalid_argument("invalid instance: " + why);
  double worst = 0;
  ExtractorInstance cur = inst;
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& v : cur.w) v = static_cast<Value>(uniform_below(rng, inst.field->order()));
    const auto state = sample_source_state(cur, rng);
    worst = std::max(worst, qsim::trace_distance(run_extractor(cur, state, route), ideal_output(cur, state)));
  }
  return worst;
}

double verify_sum_roots(std::size_t order) {
  if (order < 2) throw std::invalid_argument("order must be at least 2");
  double worst = 0;
  for (std::size_t j = 1; j < order; ++j) {
    Complex sum = 0;
    for (std::size_t x = 0; x < order; ++x) {
      sum += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>((j * x) % order) / static_cast<double>(order));
    }
    worst = std::max(worst, std::abs(sum));
  }
  return worst;
}

double subclaim_sum(const gf::FieldMatrix& R, const std::vector<Value>& u, const std::vector<Value>& y) {
  const gf::Field& F = R.field();
  const std::size_t q = F.order();
  const std::uint32_t p = F.characteristic();
  if (u.size() != R.cols() || y.size() != R.rows()) throw std::invalid_argument("vector lengths do not match R");
  const std::size_t total = ipow(q, R.cols());
  Complex sum = 0;
  for (std::size_t idx = 0; idx < total; ++idx) {
    const auto x = decode(idx, R.cols(), q);
    if (R.apply(x) != y) continue;
    std::uint32_t phase = 0;
    for (std::size_t i = 0; i < x.size(); ++i) phase = (phase + F.zp_dot(u[i], x[i])) % p;
    sum += std::polar(1.0, 2 * std::numbers::pi * phase / p);
  }
  return std::abs(sum);
}

double verify_subclaim(const gf::FieldMatrix& R, const std::vector<Value>& u, const std::vector<Value>& y,
                       const std::vector<std::size_t>& J) {
  if (u.size() != R.cols()) throw std::invalid_argument("u has the wrong length");
  if (std::all_of(u.begin(), u.end(), [](Value v) { return v == 0; })) throw std::invalid_argument("u is zero");
  for (auto j : J) {
    if (j >= R.cols()) throw std::invalid_argument("J index out of range");
    if (u[j] != 0) throw std::invalid_argument("u is not zero on J");
  }
  if (J.size() != R.rows() || R.select_columns(J).rank() != R.rows()) {
    throw std::invalid_argument("R restricted to J is not full rank");
  }
  return subclaim_sum(R, u, y);
}

SubclaimCase random_subclaim_case(const gf::Field& field, std::size_t m, std::size_t M, Rng& rng) {
  if (m == 0 || m >= M) throw std::invalid_argument("need 0 < m < M");
  const auto q = field.order();
  for (;;) {
    std::vector<Value> e(m * M);
    for (auto& v : e) v = static_cast<Value>(uniform_below(rng, q));
    gf::FieldMatrix R(field, m, M, e);
    std::vector<std::size_t> cols(M);
    for (std::size_t i = 0; i < M; ++i) cols[i] = i;
    std::shuffle(cols.begin(), cols.end(), rng);
    std::vector<std::size_t> J(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(m));
    std::sort(J.begin(), J.end());
    if (R.select_columns(J).rank() != m) continue;
    std::vector<Value> u(M, 0);
    for (std::size_t i = m; i < M; ++i) u[cols[i]] = static_cast<Value>(uniform_below(rng, q));
    if (std::all_of(u.begin(), u.end(), [](Value v) { return v == 0; })) continue;
    std::vector<Value> y(m);
    for (auto& v : y) v = static_cast<Value>(uniform_below(rng, q));
    return {std::move(R), std::move(u), std::move(y), std::move(J)};
  }
}

SearchResult search_nonuniform_source(const ExtractorInstance& inst) {
  const auto terms = source_terms(inst);
  SearchResult best{0.0, {}};
  std::vector<Complex> basis0(inst.side_dim, 0.0);
  basis0[0] = 1.0;
  const std::vector<Complex> phases{1.0, -1.0, Complex(0, 1), Complex(0, -1)};
  for (std::size_t a = 0; a < terms.size(); ++a) {
    for (std::size_t b = a + 1; b < terms.size(); ++b) {
      for (const auto& ph : phases) {
        std::vector<std::vector<Complex>> sides(terms.size(), std::vector<Complex>(inst.side_dim, 0.0));
        sides[a] = basis0;
        sides[b] = basis0;
        for (auto& c : sides[b]) c *= ph;
        const auto s = source_state(inst, sides);
        const double d = qsim::trace_distance(run_extractor(inst, s), ideal_output(inst, s));
        if (d > best.distance) best = {d, {terms[a], terms[b]}};
      }
    }
  }
  return best;
}

std::vector<GridEntry> theorem_grid() {
  const auto& f2 = gf::Field::get(2, 1);
  const auto& f3 = gf::Field::get(3, 1);
  const auto& f4 = gf::Field::get(2, 2);
  const auto& f8 = gf::Field::get(2, 3);
  const Value a4 = f4.exp_table()[1];
  auto pts = [&](std::initializer_list<int> xs) {
    std::vector<Value> v;
    for (int x : xs) v.push_back(f8.from_integer(static_cast<std::uint64_t>(x)));
    return v;
  };
  const auto src5 = pts({1, 2, 3, 4, 5});
  const auto tgt2 = pts({6, 7});
  const auto src4 = pts({1, 2, 3, 4});
  const auto tgt1 = pts({5});
  const auto vandermonde = gf::FieldMatrix(f4, 1, 4, {1, a4, f4.mul(a4, a4), f4.pow(a4, 3)});
  // columns (1, a) for a in GF(4), then (0, 1)
  const auto projective = gf::FieldMatrix(f4, 2, 5, {1, 1, 1, 1, 0, 0, 1, a4, f4.mul(a4, a4), 1});

  return {
      {"gf2_M3_m1_xor", ExtractorInstance::make(gf::FieldMatrix(f2, 1, 3, {1, 1, 1})), Route::dense},
      {"gf2_M5_m1_xor", ExtractorInstance::make(gf::FieldMatrix(f2, 1, 5, {1, 1, 1, 1, 1})), Route::dense},
      {"gf3_M4_m1", ExtractorInstance::make(gf::FieldMatrix(f3, 1, 4, {1, 1, 2, 2})), Route::dense},
      {"gf4_M4_m1_vandermonde", ExtractorInstance::make(vandermonde), Route::dense},
      {"gf4_M4_m1_qubit_hadamard", ExtractorInstance::make(vandermonde), Route::dense_qubits},
      {"gf4_M5_m2_rs_parity", ExtractorInstance::make(projective), Route::dense},
      {"gf8_M4_m1_interpolation", ExtractorInstance::make(gf::interpolation_matrix(f8, 3, src4, tgt1)),
       Route::dense},
      {"gf8_M5_m2_interpolation", ExtractorInstance::make(gf::interpolation_matrix(f8, 4, src5, tgt2)),
       Route::fused},
  };
}

ExtractorInstance repeated_column_control() {
  const auto& f2 = gf::Field::get(2, 1);
  return ExtractorInstance::make(gf::FieldMatrix(f2, 2, 6, {1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1}));
}

ExtractorInstance weight_boundary_control() {
  auto inst = ExtractorInstance::make(gf::FieldMatrix(gf::Field::get(2, 1), 1, 4, {1, 1, 1, 1}));
  inst.weight_bound += 1;
  return inst;
}

}  // namespace sscd::extractor
