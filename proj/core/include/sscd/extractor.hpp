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

// Numerical checks of the seedless extractor: for a source
//   |gamma> = sum_u |psi_u>_A |u + w>_X   with every h(u) < (M - m)/2
// and a matrix R whose every m columns are independent, Fourier-transforming
// X, writing R x into Y and tracing out X leaves A untouched and Y uniform.

#include <optional>
#include <string>
#include <vector>

#include "sscd/gf.hpp"
#include "sscd/qsim.hpp"
#include "sscd/random.hpp"

namespace sscd::extractor {

using gf::Value;
using qsim::Complex;

struct ExtractorInstance {
  const gf::Field* field = nullptr;
  std::size_t M = 0;
  std::size_t m = 0;
  gf::FieldMatrix R{gf::Field::get(2, 1), 0, 0};
  std::vector<Value> w;
  std::size_t weight_bound = 0;  // sources have h(u) < weight_bound
  std::size_t side_dim = 4;      // power of two

  /// weight_bound defaults to ceil((M - m) / 2), the largest strict bound
  /// allowed, and w to zero.
  static ExtractorInstance make(const gf::FieldMatrix& R, std::size_t side_dim = 4);
};

/// Empty when the instance satisfies the hypotheses, else the first failure.
std::string check_instance(const ExtractorInstance& inst);

/// Every u in F^M with h(u) < weight_bound, in lexicographic order.
std::vector<std::vector<Value>> source_terms(const ExtractorInstance& inst);

qsim::QuditLayout source_layout(const ExtractorInstance& inst);
qsim::QuditLayout output_layout(const ExtractorInstance& inst);

/// Haar-random side vectors, one per source term, normalized jointly.
/// Registers: "A" (log2 side_dim qubits) then "X". Throws
/// std::length_error past the dense cap.
qsim::DenseState sample_source_state(const ExtractorInstance& inst, Rng& rng);
/// Caller-chosen side vectors, sides[t] for source_terms(inst)[t].
qsim::DenseState source_state(const ExtractorInstance& inst, const std::vector<std::vector<Complex>>& sides);

enum class Route {
  automatic,    // dense when it fits, fused otherwise
  dense,        // QFT, isometry into Y, partial trace
  dense_qubits, // as dense, with X viewed as k*M Z_p-qudits for the transform
  fused,        // sum_x |phi_x><phi_x| (x) |Rx><Rx| without materializing Y
};

/// rho over (A, Y). Throws std::invalid_argument on a layout mismatch.
qsim::DensityMatrix run_extractor(const ExtractorInstance& inst, const qsim::DenseState& state,
                                  Route route = Route::automatic);

/// Tr_X |gamma><gamma| (x) uniform on Y.
qsim::DensityMatrix ideal_output(const ExtractorInstance& inst, const qsim::DenseState& state);

/// Max trace distance over `trials` fresh sources, each with a fresh w.
double verify_theorem(const ExtractorInstance& inst, std::size_t trials, Rng& rng, Route route = Route::automatic);

/// max over nontrivial j of |sum_x exp(2 pi i j x / order)|.
double verify_sum_roots(std::size_t order);

/// |sum over {x : R x = y} of omega_p^{u . x}|, no preconditions checked.
double subclaim_sum(const gf::FieldMatrix& R, const std::vector<Value>& u, const std::vector<Value>& y);
/// As subclaim_sum, after checking u != 0, u_J = 0 and R_J of full rank
/// (J zero-based column indices, |J| = rows). Throws std::invalid_argument.
double verify_subclaim(const gf::FieldMatrix& R, const std::vector<Value>& u, const std::vector<Value>& y,
                       const std::vector<std::size_t>& J);

struct SubclaimCase {
  gf::FieldMatrix R{gf::Field::get(2, 1), 0, 0};
  std::vector<Value> u;
  std::vector<Value> y;
  std::vector<std::size_t> J;
};
/// A random case meeting the preconditions, with R of shape m x M.
SubclaimCase random_subclaim_case(const gf::Field& field, std::size_t m, std::size_t M, Rng& rng);

/// Searches sources made of one or two equal-weight terms (same side vector,
/// relative sign +-1) allowed by inst.weight_bound, without checking the
/// hypotheses. Returns the largest distance from the ideal output.
struct SearchResult {
  double distance;
  std::vector<std::vector<Value>> witness;
};
SearchResult search_nonuniform_source(const ExtractorInstance& inst);

struct GridEntry {
  std::string name;
  ExtractorInstance instance;
  Route route;
};
/// Instances satisfying the hypotheses over GF(2), GF(3), GF(4) and GF(8),
/// including an interpolation-matrix block and a per-qubit Hadamard route.
/// GF(2) with M = 5, m = 2 has no valid R (only three nonzero columns).
std::vector<GridEntry> theorem_grid();

/// GF(2), M = 6, m = 2, with repeated columns so a weight-2 vector lies in
/// the row space.
ExtractorInstance repeated_column_control();
/// GF(2), M = 4, m = 1, all-ones R, sources allowed up to weight 2, one past
/// the strict bound.
ExtractorInstance weight_boundary_control();

}  // namespace sscd::extractor
