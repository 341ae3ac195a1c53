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

#include <algorithm>
#include <numeric>
#include <set>

#include "sscd/gf.hpp"

namespace sscd::gf {

Polynomial::Polynomial(const Field& field, std::vector<Value> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) {
    if (!field.contains(c)) throw std::out_of_range("coefficient outside field");
  }
  trim();
}

Polynomial Polynomial::monomial(const Field& f, Value c, std::size_t deg) {
  std::vector<Value> coeffs(deg + 1, 0);
  coeffs[deg] = c;
  return {f, std::move(coeffs)};
}

Polynomial Polynomial::from_elems(std::span<const FieldElem> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("need at least one coefficient to fix the field");
  const Field& f = coeffs.front().field();
  std::vector<Value> raw;
  raw.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (&c.field() != &f) throw FieldMismatch();
    raw.push_back(c.value());
  }
  return {f, std::move(raw)};
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Value Polynomial::eval(Value x) const {
  Value acc = 0;
  const Field& f = *field_;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

std::vector<Value> Polynomial::eval_many(std::span<const Value> xs) const {
  constexpr std::size_t kLanes = 4;
  const Field& f = *field_;
  std::vector<Value> out(xs.size(), 0);
  std::size_t b = 0;
  for (; b + kLanes <= xs.size(); b += kLanes) {
    Value acc[kLanes] = {0, 0, 0, 0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      for (std::size_t l = 0; l < kLanes; ++l) acc[l] = f.add(f.mul(acc[l], xs[b + l]), *it);
    }
    for (std::size_t l = 0; l < kLanes; ++l) out[b + l] = acc[l];
  }
  for (; b < xs.size(); ++b) out[b] = eval(xs[b]);
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_) throw FieldMismatch();
  const Field& f = *a.field_;
  std::vector<Value> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return {f, std::move(out)};
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_) throw FieldMismatch();
  const Field& f = *a.field_;
  std::vector<Value> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
  return {f, std::move(out)};
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_) throw FieldMismatch();
  const Field& f = *a.field_;
  if (a.is_zero() || b.is_zero()) return Polynomial(f);
  std::vector<Value> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return {f, std::move(out)};
}

Polynomial Polynomial::scaled(Value c) const {
  std::vector<Value> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->mul(coeffs_[i], c);
  return {*field_, std::move(out)};
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (field_ != divisor.field_) throw FieldMismatch();
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = *field_;
  std::vector<Value> rem = coeffs_;
  const std::size_t db = divisor.coeffs_.size() - 1;
  if (rem.size() <= db) return {Polynomial(f), *this};
  std::vector<Value> quot(rem.size() - db, 0);
  const Value inv_lead = f.inv(divisor.leading());
  for (std::size_t i = rem.size(); i-- > db;) {
    const Value factor = f.mul(rem[i], inv_lead);
    if (factor == 0) continue;
    quot[i - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(factor, divisor.coeffs_[j]));
    }
  }
  rem.resize(db);
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

FieldElem poly_eval(const Polynomial& f, const FieldElem& x) {
  if (&f.field() != &x.field()) throw FieldMismatch();
  return {f.field(), f.eval(x.value())};
}

// ---------------------------------------------------------------------------

FieldMatrix::FieldMatrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

FieldMatrix::FieldMatrix(const Field& field, std::size_t rows, std::size_t cols,
                         std::vector<Value> entries)
    : field_(&field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw std::invalid_argument("entries length != rows*cols");
  for (auto v : entries_) {
    if (!field.contains(v)) throw std::out_of_range("matrix entry outside field");
  }
}

FieldMatrix FieldMatrix::identity(const Field& field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Value> FieldMatrix::apply(std::span<const Value> x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length != matrix columns");
  const Field& f = *field_;
  std::vector<Value> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Value acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = f.add(acc, f.mul(at(r, c), x[c]));
    out[r] = acc;
  }
  return out;
}

FieldMatrix FieldMatrix::select_columns(std::span<const std::size_t> cols) const {
  FieldMatrix out(*field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] >= cols_) throw std::out_of_range("column index");
      out.at(r, j) = at(r, cols[j]);
    }
  }
  return out;
}

std::size_t FieldMatrix::rank() const {
  const Field& f = *field_;
  std::vector<Value> m = entries_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && m[pivot * cols_ + c] == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m[pivot * cols_ + j], m[rank * cols_ + j]);
    }
    const Value inv = f.inv(m[rank * cols_ + c]);
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      const Value factor = f.mul(m[r * cols_ + c], inv);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols_; ++j) {
        m[r * cols_ + j] = f.sub(m[r * cols_ + j], f.mul(factor, m[rank * cols_ + j]));
      }
    }
    ++rank;
  }
  return rank;
}

namespace {
void require_distinct(std::span<const Value> xs, const char* what) {
  std::set<Value> seen(xs.begin(), xs.end());
  if (seen.size() != xs.size()) throw std::invalid_argument(std::string("duplicate ") + what);
}
}  // namespace

FieldMatrix interpolation_matrix(const Field& field, std::size_t deg,
                                 std::span<const Value> source_xs,
                                 std::span<const Value> target_xs) {
  if (source_xs.size() != deg + 1) {
    throw std::invalid_argument("interpolation needs exactly deg+1 source points");
  }
  require_distinct(source_xs, "source points");
  require_distinct(target_xs, "target points");
  for (auto x : source_xs) {
    if (!field.contains(x)) throw std::out_of_range("source point outside field");
  }
  FieldMatrix r(field, target_xs.size(), source_xs.size());
  for (std::size_t t = 0; t < target_xs.size(); ++t) {
    const Value y = target_xs[t];
    for (std::size_t s = 0; s < source_xs.size(); ++s) {
      // Lagrange basis L_s(y) = prod_{j != s} (y - x_j) / (x_s - x_j).
      Value num = 1, den = 1;
      for (std::size_t j = 0; j < source_xs.size(); ++j) {
        if (j == s) continue;
        num = field.mul(num, field.sub(y, source_xs[j]));
        den = field.mul(den, field.sub(source_xs[s], source_xs[j]));
      }
      r.at(t, s) = field.div(num, den);
    }
  }
  return r;
}

bool check_column_independence(const FieldMatrix& r, std::size_t m) {
  if (m > r.cols()) throw std::invalid_argument("m exceeds the number of columns");
  if (m == 0) return true;
  if (m > r.rows()) return false;
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (r.select_columns(idx).rank() != m) return false;
    // Next m-combination of [0, cols) in lexicographic order.
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == r.cols() - m + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Polynomial interpolate(const Field& field, std::span<const EvalPoint> points) {
  std::vector<Value> xs, ys;
  for (const auto& pt : points) {
    xs.push_back(pt.x);
    ys.push_back(pt.y);
  }
  require_distinct(xs, "evaluation points");
  if (points.empty()) return Polynomial(field);
  ReedSolomonDecoder dec(field, points.size() - 1, xs);
  return *dec.decode(ys);
}

}  // namespace sscd::gf
