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

#include <set>

#include "sscd/gf.hpp"

namespace sscd::gf {
namespace {

std::size_t agreements(const Polynomial& f, std::span<const Value> xs, std::span<const Value> ys) {
  const auto vals = f.eval_many(xs);
  std::size_t n = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) n += (vals[i] == ys[i]);
  return n;
}

void check_points(const Field& field, std::size_t deg, std::span<const Value> xs) {
  if (xs.size() <= deg) throw std::invalid_argument("need more than deg points");
  std::set<Value> seen;
  for (auto x : xs) {
    if (!field.contains(x)) throw std::out_of_range("evaluation point outside field");
    if (!seen.insert(x).second) throw std::invalid_argument("duplicate evaluation point");
  }
}

// Solves A z = b (A is rows x cols, row-major). Returns any solution or
// nullopt if the system is inconsistent.
std::optional<std::vector<Value>> solve_linear(const Field& f, std::size_t rows, std::size_t cols,
                                               std::vector<Value> a, std::vector<Value> b) {
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[rank * cols + j]);
      std::swap(b[p], b[rank]);
    }
    const Value inv = f.inv(a[rank * cols + c]);
    for (std::size_t j = 0; j < cols; ++j) a[rank * cols + j] = f.mul(a[rank * cols + j], inv);
    b[rank] = f.mul(b[rank], inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const Value factor = a[r * cols + c];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        a[r * cols + j] = f.sub(a[r * cols + j], f.mul(factor, a[rank * cols + j]));
      }
      b[r] = f.sub(b[r], f.mul(factor, b[rank]));
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r) {
    if (b[r] != 0) return std::nullopt;
  }
  std::vector<Value> z(cols, 0);
  for (std::size_t r = 0; r < rank; ++r) z[pivot_col[r]] = b[r];
  return z;
}

}  // namespace

ReedSolomonDecoder::ReedSolomonDecoder(const Field& field, std::size_t deg, std::vector<Value> xs)
    : field_(&field), deg_(deg), xs_(std::move(xs)), master_(field) {
  check_points(field, deg, xs_);
  const auto logs = field.log_table();
  log_xs_.resize(xs_.size());
  for (std::size_t i = 0; i < xs_.size(); ++i) log_xs_[i] = xs_[i] == 0 ? 0 : logs[xs_[i]];

  // prod (X - x_i), built one linear factor at a time.
  std::vector<Value> m{1};
  for (auto x : xs_) {
    std::vector<Value> next(m.size() + 1, 0);
    const Value neg_x = field.neg(x);
    for (std::size_t j = 0; j < m.size(); ++j) {
      next[j + 1] = field.add(next[j + 1], m[j]);
      next[j] = field.add(next[j], field.mul(m[j], neg_x));
    }
    m = std::move(next);
  }
  master_ = Polynomial(field, m);

  // weights_i = 1 / prod_{j != i} (x_i - x_j) = 1 / master'(x_i)
  std::vector<Value> deriv(m.size() - 1, 0);
  for (std::size_t j = 1; j < m.size(); ++j) {
    Value term = 0;
    for (std::size_t r = 0; r < j % field.characteristic(); ++r) term = field.add(term, m[j]);
    deriv[j - 1] = term;
  }
  const Polynomial dpoly(field, deriv);
  weights_.resize(xs_.size());
  for (std::size_t i = 0; i < xs_.size(); ++i) weights_[i] = field.inv(dpoly.eval(xs_[i]));
}

std::size_t ReedSolomonDecoder::radius() const { return (xs_.size() - deg_ - 1) / 2; }

Polynomial ReedSolomonDecoder::interpolant(std::span<const Value> ys) const {
  const Field& f = *field_;
  const auto exp = f.exp_table();
  const auto logs = f.log_table();
  const auto& m = master_.coeffs();
  const std::size_t n = xs_.size();
  std::vector<Value> acc(n, 0);
  const bool binary = f.characteristic() == 2;
  if (binary) {
    // Four synthetic divisions at a time; each one is a serial chain of
    // table lookups, so interleaving them lets the loads overlap.
    constexpr std::size_t kLanes = 4;
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < n; ++i) {
      if (f.mul(ys[i], weights_[i]) != 0) live.push_back(i);
    }
    for (std::size_t b = 0; b < live.size(); b += kLanes) {
      std::uint32_t log_c[kLanes], log_x[kLanes];
      bool active[kLanes], x_zero[kLanes];
      Value q[kLanes];
      for (std::size_t l = 0; l < kLanes; ++l) {
        active[l] = b + l < live.size();
        const std::size_t i = active[l] ? live[b + l] : live[b];
        log_c[l] = logs[f.mul(ys[i], weights_[i])];
        log_x[l] = log_xs_[i];
        x_zero[l] = xs_[i] == 0;
        q[l] = 1;
      }
      for (std::size_t j = n; j-- > 0;) {
        Value sum = 0;
        for (std::size_t l = 0; l < kLanes; ++l) {
          if (j + 1 < n) q[l] = m[j + 1] ^ ((q[l] == 0 || x_zero[l]) ? 0 : exp[logs[q[l]] + log_x[l]]);
          if (active[l] && q[l] != 0) sum ^= exp[logs[q[l]] + log_c[l]];
        }
        acc[j] ^= sum;
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      // Synthetic division of master by (X - x_i): q_{n-1} = 1,
      // q_j = m_{j+1} + x_i q_{j+1}; then acc += c * q.
      const Value c = f.mul(ys[i], weights_[i]);
      if (c == 0) continue;
      Value qj = 1;
      for (std::size_t j = n; j-- > 0;) {
        if (j + 1 < n) qj = f.add(m[j + 1], f.mul(xs_[i], qj));
        acc[j] = f.add(acc[j], f.mul(c, qj));
      }
    }
  }
  return {f, std::move(acc)};
}

std::optional<Polynomial> ReedSolomonDecoder::decode(std::span<const Value> ys) const {
  if (ys.size() != xs_.size()) throw std::invalid_argument("word length != number of points");
  const Field& f = *field_;
  for (auto y : ys) {
    if (!f.contains(y)) throw std::out_of_range("value outside field");
  }
  const std::size_t n = xs_.size();
  const std::size_t k = deg_ + 1;
  // Partial extended Euclid on (master, interpolant), tracking only the
  // cofactor of the interpolant; stop once 2 deg(r) < n + k.
  Polynomial r_prev = master_;
  Polynomial r = interpolant(ys);
  Polynomial v_prev(f);
  Polynomial v = Polynomial::constant(f, 1);
  while (!r.is_zero() && 2 * static_cast<std::size_t>(r.degree()) >= n + k) {
    auto [quot, rem] = r_prev.divmod(r);
    Polynomial v_next = v_prev - quot * v;
    r_prev = std::move(r);
    r = std::move(rem);
    v_prev = std::move(v);
    v = std::move(v_next);
  }
  if (v.is_zero()) return std::nullopt;
  auto [poly, rem] = r.divmod(v);
  if (!rem.is_zero() || poly.degree() > static_cast<int>(deg_)) return std::nullopt;
  if (agreements(poly, xs_, ys) + radius() < n) return std::nullopt;
  return poly;
}

std::optional<Polynomial> rs_correct(const Field& field, std::size_t deg,
                                     std::span<const EvalPoint> points) {
  std::vector<Value> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const auto& pt : points) {
    xs.push_back(pt.x);
    ys.push_back(pt.y);
  }
  return ReedSolomonDecoder(field, deg, std::move(xs)).decode(ys);
}

std::optional<Polynomial> rs_correct_berlekamp_welch(const Field& field, std::size_t deg,
                                                     std::span<const EvalPoint> points) {
  std::vector<Value> xs, ys;
  for (const auto& pt : points) {
    xs.push_back(pt.x);
    ys.push_back(pt.y);
    if (!field.contains(pt.y)) throw std::out_of_range("value outside field");
  }
  check_points(field, deg, xs);
  const std::size_t n = xs.size();
  const std::size_t e = (n - deg - 1) / 2;
  // Unknowns: E = X^e + sum_{j<e} E_j X^j, Q = sum_{j<=e+deg} Q_j X^j.
  // Equations: Q(x_i) - y_i sum_j E_j x_i^j = y_i x_i^e.
  const std::size_t nq = e + deg + 1;
  const std::size_t cols = nq + e;
  std::vector<Value> a(n * cols, 0), b(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Value xp = 1;
    for (std::size_t j = 0; j < nq; ++j) {
      a[i * cols + j] = xp;
      if (j < e) a[i * cols + nq + j] = field.neg(field.mul(ys[i], xp));
      if (j == e) b[i] = field.mul(ys[i], xp);
      xp = field.mul(xp, xs[i]);
    }
  }
  auto z = solve_linear(field, n, cols, std::move(a), std::move(b));
  if (!z) return std::nullopt;
  Polynomial q(field, std::vector<Value>(z->begin(), z->begin() + nq));
  std::vector<Value> ecoef(z->begin() + nq, z->end());
  ecoef.push_back(1);
  Polynomial err(field, std::move(ecoef));
  auto [poly, rem] = q.divmod(err);
  if (!rem.is_zero() || poly.degree() > static_cast<int>(deg)) return std::nullopt;
  if (agreements(poly, xs, ys) + e < n) return std::nullopt;
  return poly;
}

}  // namespace sscd::gf
