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

// Qudit simulation in two tiers. ProductShare tracks unentangled positions,
// each a computational or Fourier basis state, at any size. DenseState is a
// full amplitude vector over named registers for small adversarial and
// extractor experiments.
//
// Fourier basis over GF(p^k): the image of the computational basis under
// the QFT of the additive group Z_p^k, |x> -> q^{-1/2} sum_y w^{x.y}|y>
// with w = exp(2 pi i / p) and x.y the Z_p dot product of coefficient
// vectors. For p = 2 this is a Hadamard on every underlying qubit.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sscd/gf.hpp"
#include "sscd/random.hpp"

namespace sscd::qsim {

using Complex = std::complex<double>;
using gf::Value;

inline constexpr std::size_t kDefaultDenseCap = std::size_t{1} << 22;
inline constexpr double kUnitarityTol = 1e-12;
inline constexpr double kPhysicsTol = 1e-9;

enum class Basis : std::uint8_t { computational = 0, fourier = 1 };

// ---------------------------------------------------------------------------
// Product tier

struct Position {
  Basis basis;
  Value value;
  friend bool operator==(const Position&, const Position&) = default;
};

/// A product of single-qudit basis states over one field.
class ProductShare {
 public:
  explicit ProductShare(const gf::Field& field) : field_(&field) {}
  ProductShare(const gf::Field& field, std::vector<Position> positions);

  const gf::Field& field() const { return *field_; }
  std::size_t size() const { return positions_.size(); }
  const std::vector<Position>& positions() const { return positions_; }
  const Position& operator[](std::size_t i) const { return positions_.at(i); }
  void push_back(Position p);

  /// Measures position i in `basis`. Same basis: the stored value, no
  /// disturbance. Conjugate basis: a uniform outcome, and the position
  /// collapses to that outcome in the measured basis.
  Value measure(std::size_t i, Basis basis, Rng& rng);
  std::vector<Value> measure_all(Basis basis, Rng& rng);

  friend bool operator==(const ProductShare& a, const ProductShare& b) {
    return a.field_ == b.field_ && a.positions_ == b.positions_;
  }

 private:
  const gf::Field* field_;
  std::vector<Position> positions_;
};

// ---------------------------------------------------------------------------
// Dense tier

struct Register {
  std::string name;
  std::size_t count;
  const gf::Field* field;
};

/// Registers in order; the last qudit of the last register is the least
/// significant digit of the amplitude index, and within a register the
/// first qudit is the most significant.
class QuditLayout {
 public:
  QuditLayout() = default;
  explicit QuditLayout(std::vector<Register> regs, std::size_t cap = kDefaultDenseCap);

  const std::vector<Register>& registers() const { return regs_; }
  std::size_t dimension() const { return dim_; }
  std::size_t cap() const { return cap_; }
  std::size_t index_of(const std::string& name) const;
  bool has(const std::string& name) const;
  const Register& reg(const std::string& name) const { return regs_[index_of(name)]; }
  /// Dimension of one register (q^count).
  std::size_t reg_dimension(const std::string& name) const;
  /// Amplitude-index stride of the least significant qudit of a register.
  std::size_t reg_stride(const std::string& name) const;

  QuditLayout with(Register r) const;
  QuditLayout subset(const std::vector<std::string>& keep) const;
  friend bool operator==(const QuditLayout& a, const QuditLayout& b);

 private:
  std::vector<Register> regs_;
  std::vector<std::size_t> strides_;
  std::size_t dim_ = 1;
  std::size_t cap_ = kDefaultDenseCap;
};

class DenseState {
 public:
  /// All-zero basis state.
  explicit DenseState(QuditLayout layout);
  /// Throws std::invalid_argument if the amplitudes have the wrong length
  /// or are not normalized within `tol`.
  DenseState(QuditLayout layout, std::vector<Complex> amps, double tol = kUnitarityTol);

  /// Basis state with the given values per register (register order).
  static DenseState basis(QuditLayout layout, const std::vector<std::vector<Value>>& values);
  /// One-register embedding of a product share.
  static DenseState from_product(const ProductShare& share, const std::string& name,
                                 std::size_t cap = kDefaultDenseCap);

  const QuditLayout& layout() const { return layout_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  std::vector<Complex>& mutable_amplitudes() { return amps_; }
  double norm() const;

  /// Tensor with a fresh register in |0...0>.
  DenseState with_register(const std::string& name, std::size_t count, const gf::Field& field) const;

  /// Value of a register (as a vector of qudit values) inside an index.
  std::vector<Value> register_values(std::size_t index, const std::string& name) const;

 private:
  QuditLayout layout_;
  std::vector<Complex> amps_;
};

class DensityMatrix {
 public:
  DensityMatrix(QuditLayout layout, std::vector<Complex> entries);
  static DensityMatrix pure(const DenseState& s);
  /// Maximally mixed state on a layout.
  static DensityMatrix maximally_mixed(QuditLayout layout);

  const QuditLayout& layout() const { return layout_; }
  std::size_t dimension() const { return dim_; }
  Complex at(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  const std::vector<Complex>& entries() const { return entries_; }
  Complex trace() const;

  /// Hermitian, unit trace and PSD (min eigenvalue >= -tol).
  bool is_valid(double tol = kPhysicsTol) const;
  /// Kronecker product; the layout concatenates registers.
  DensityMatrix tensor(const DensityMatrix& other) const;

 private:
  QuditLayout layout_;
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// QFT (or its inverse) on every Z_p digit of every qudit in a register.
DenseState qft_per_subfield(const DenseState& s, const std::string& reg, bool inverse = false);

struct Measurement {
  std::vector<Value> outcome;
  DenseState collapsed;
};

Measurement measure_computational(const DenseState& s, const std::string& reg, Rng& rng);
/// Fourier basis measurement: outcome r means the register collapsed to
/// QFT|r>. Implemented as inverse QFT, computational measurement, QFT.
Measurement measure_fourier(const DenseState& s, const std::string& reg, Rng& rng);
/// Outcome distribution of a computational measurement on one register.
std::vector<double> outcome_probabilities(const DenseState& s, const std::string& reg);

/// |x>|y> -> |x>|y + x> in the given basis. `dst` must exist, match `src`
/// in size and field, and hold |0...0>.
DenseState copy_isometry(const DenseState& s, const std::string& src, const std::string& dst,
                         Basis basis);
/// |x>|y> -> |x>|y + Rx> with R over the register field; dst has R.rows()
/// qudits and must hold |0...0>, src has R.cols().
DenseState apply_linear_map(const DenseState& s, const gf::FieldMatrix& r, const std::string& src,
                            const std::string& dst);

DensityMatrix partial_trace(const DenseState& s, const std::vector<std::string>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep);

/// 1/2 ||a - b||_1 from the eigenvalues of a - b.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

struct PredicateResult {
  bool accept;
  DenseState collapsed;
  double accept_probability;
};

/// Two-outcome measurement {P, I - P} where P projects onto Fourier
/// encodings of vectors at field-Hamming distance < ell/2 from `cert`.
PredicateResult deletion_predicate(const DenseState& s, const std::string& reg,
                                   std::span<const Value> cert, std::size_t ell, Rng& rng);

/// Acceptance probability of the deletion predicate without sampling.
double deletion_predicate_probability(const DenseState& s, const std::string& reg,
                                      std::span<const Value> cert, std::size_t ell);

}  // namespace sscd::qsim
