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

// Exact arithmetic over GF(p^k): field elements, polynomials, matrices,
// Lagrange interpolation matrices and Reed-Solomon correction.
//
// An element of GF(p^k) is stored as its coefficient vector over Z_p packed
// into one integer, little-endian in base p: (c_0, ..., c_{k-1}) is stored as
// c_0 + c_1 p + ... + c_{k-1} p^{k-1}. For p = 2 this is the usual bit vector.
// This packed form is also the Z_p^k additive-group index used by the
// quantum simulator, so no conversion is needed between the two views.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sscd::gf {

using Value = std::uint32_t;

// Thrown when elements or objects over different fields meet in one operation.
class FieldMismatch : public std::logic_error {
 public:
  FieldMismatch() : std::logic_error("operands belong to different fields") {}
};

/// A finite field GF(p^k) defined by a monic irreducible modulus over Z_p.
///
/// Fields are interned: `Field::get` and `Field::with_modulus` return a
/// reference to a process-lifetime object, so two fields are the same iff
/// their addresses are equal. Elements hold a plain pointer to their field.
class Field {
 public:
  /// Field with the canonical modulus for (p, k): the lexicographically
  /// smallest monic irreducible polynomial of degree k over Z_p.
  static const Field& get(std::uint32_t p, std::uint32_t k);
  /// Field with a caller-chosen modulus, lowest coefficient first, monic,
  /// length k + 1. Throws std::invalid_argument if not irreducible.
  static const Field& with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);
  /// Parses "p^k", "q" (prime power) or "GF(p^k)".
  static const Field& parse(const std::string& text);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string name() const;

  Value zero() const { return 0; }
  Value one() const { return 1; }
  bool contains(Value v) const { return v < q_; }

  Value add(Value a, Value b) const;
  Value sub(Value a, Value b) const;
  Value neg(Value a) const;
  Value mul(Value a, Value b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws std::domain_error on zero.
  Value inv(Value a) const;
  Value div(Value a, Value b) const { return mul(a, inv(b)); }
  Value pow(Value a, std::uint64_t e) const;

  /// Coefficients over Z_p, lowest first, always length k.
  std::vector<std::uint32_t> coeffs(Value v) const;
  Value from_coeffs(std::span<const std::uint32_t> c) const;
  /// The element whose base-p digits are those of the integer n (n < q).
  Value from_integer(std::uint64_t n) const;
  /// Dot product of the Z_p^k coefficient vectors of a and b, in Z_p.
  std::uint32_t zp_dot(Value a, Value b) const;

  /// Multiplication by schoolbook polynomial product and reduction; used to
  /// build the tables and exposed for cross-checks.
  Value mul_by_reduction(Value a, Value b) const;

  /// Discrete log/exp tables relative to a fixed generator; exp has length
  /// 2(q-1) so exp[log a + log b] never needs a reduction.
  std::span<const Value> exp_table() const { return exp_; }
  std::span<const std::uint32_t> log_table() const { return log_; }

 private:
  Field(std::uint32_t p, std::vector<std::uint32_t> modulus);
  void build_tables();

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;
  std::vector<Value> exp_;           // length 2(q-1), generator powers
  std::vector<std::uint32_t> log_;   // log_[0] unused

  friend struct FieldRegistry;
};

/// True iff `modulus` (lowest first, degree >= 1) is irreducible over Z_p.
/// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> modulus);

/// Smallest monic irreducible of degree k over Z_p (lowest first, monic).
std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t k);

/// An element of a specific field.
class FieldElem {
 public:
  FieldElem(const Field& field, Value value);
  static FieldElem zero(const Field& f) { return {f, 0}; }
  static FieldElem one(const Field& f) { return {f, 1}; }

  const Field& field() const { return *field_; }
  Value value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem operator-() const { return {*field_, field_->neg(value_)}; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  const Field* field_;
  Value value_;
};

FieldElem field_add(const FieldElem& a, const FieldElem& b);
FieldElem field_mul(const FieldElem& a, const FieldElem& b);
FieldElem field_inv(const FieldElem& a);

/// Polynomial over a field, lowest-degree coefficient first. The leading
/// coefficient is nonzero unless the polynomial is zero (empty coefficients).
class Polynomial {
 public:
  explicit Polynomial(const Field& field) : field_(&field) {}
  Polynomial(const Field& field, std::vector<Value> coeffs);
  static Polynomial constant(const Field& f, Value c) { return {f, {c}}; }
  static Polynomial monomial(const Field& f, Value c, std::size_t deg);
  static Polynomial from_elems(std::span<const FieldElem> coeffs);

  const Field& field() const { return *field_; }
  const std::vector<Value>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Value coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Value leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  Value eval(Value x) const;
  /// eval at every point of xs; same results, several points per pass.
  std::vector<Value> eval_many(std::span<const Value> xs) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(Value c) const;
  /// Quotient and remainder; throws std::domain_error on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  const Field* field_;
  std::vector<Value> coeffs_;
};

FieldElem poly_eval(const Polynomial& f, const FieldElem& x);

/// Row-major matrix over a field.
class FieldMatrix {
 public:
  FieldMatrix(const Field& field, std::size_t rows, std::size_t cols);
  FieldMatrix(const Field& field, std::size_t rows, std::size_t cols, std::vector<Value> entries);
  static FieldMatrix identity(const Field& field, std::size_t n);

  const Field& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Value at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Value& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const std::vector<Value>& entries() const { return entries_; }

  std::vector<Value> apply(std::span<const Value> x) const;
  FieldMatrix select_columns(std::span<const std::size_t> cols) const;
  std::size_t rank() const;
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  const Field* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Value> entries_;
};

/// Matrix R (|targets| x (deg+1)) with R * (f(x))_{x in sources} =
/// (f(y))_{y in targets} for every polynomial f of degree <= deg.
FieldMatrix interpolation_matrix(const Field& field, std::size_t deg,
                                 std::span<const Value> source_xs,
                                 std::span<const Value> target_xs);

/// True iff every m-subset of the columns of R is linearly independent.
/// Exhaustive over all subsets. Throws std::invalid_argument if m > cols.
bool check_column_independence(const FieldMatrix& r, std::size_t m);

struct EvalPoint {
  Value x;
  Value y;
};

/// Interpolating polynomial of degree < points.size() (x-values distinct).
Polynomial interpolate(const Field& field, std::span<const EvalPoint> points);

/// Gao decoder for a fixed evaluation set; the product polynomial and the
/// barycentric weights are computed once and reused across words.
class ReedSolomonDecoder {
 public:
  ReedSolomonDecoder(const Field& field, std::size_t deg, std::vector<Value> xs);

  const Field& field() const { return *field_; }
  std::size_t degree() const { return deg_; }
  const std::vector<Value>& xs() const { return xs_; }
  /// Number of errors always corrected: floor((s - deg - 1) / 2).
  std::size_t radius() const;

  /// The unique polynomial of degree <= deg within `radius()` of the word,
  /// or nullopt. A returned polynomial always agrees with the word on at
  /// least s - radius() positions.
  std::optional<Polynomial> decode(std::span<const Value> ys) const;

 private:
  Polynomial interpolant(std::span<const Value> ys) const;

  const Field* field_;
  std::size_t deg_;
  std::vector<Value> xs_;
  std::vector<Value> log_xs_;
  Polynomial master_;           // prod (X - x_i)
  std::vector<Value> weights_;  // 1 / prod_{j != i} (x_i - x_j)
};

/// Reed-Solomon correction (Gao). Fails (nullopt) when no polynomial of
/// degree <= deg lies within the decoding radius of the points.
/// Throws std::invalid_argument on duplicate x or |points| <= deg.
std::optional<Polynomial> rs_correct(const Field& field, std::size_t deg,
                                     std::span<const EvalPoint> points);

/// Berlekamp-Welch decoder with the same contract as rs_correct.
std::optional<Polynomial> rs_correct_berlekamp_welch(const Field& field, std::size_t deg,
                                                     std::span<const EvalPoint> points);

/// Number of nonzero entries.
std::size_t hamming_weight(std::span<const Value> v);

}  // namespace sscd::gf
