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

// BB84-style 2-out-of-2 secret sharing with certified deletion.
//
// One secret bit s uses lambda qubits H^theta|x>: position i holds x_i in
// the computational basis when theta_i = 0 and in the Hadamard basis when
// theta_i = 1. The classical share is (theta, s XOR parity of x over the
// theta = 0 positions). A deletion certificate is the Hadamard measurement
// of every qubit; it verifies when it matches x on every theta = 1 position.
// Multi-bit secrets use one independent block of lambda qubits per bit.

#include <cstdint>
#include <vector>

#include "sscd/qsim.hpp"
#include "sscd/random.hpp"

namespace sscd::bk {

using Bits = std::vector<std::uint8_t>;
using Bytes = std::vector<std::uint8_t>;

struct VerificationKey {
  Bits x;
  Bits theta;
  friend bool operator==(const VerificationKey&, const VerificationKey&) = default;
};

struct ClassicalShare {
  std::size_t lambda = 0;
  Bits theta;   // lambda bits per secret bit
  Bits masked;  // one bit per secret bit
  friend bool operator==(const ClassicalShare&, const ClassicalShare&) = default;
};

struct Share {
  qsim::ProductShare qshare{gf::Field::get(2, 1)};
  ClassicalShare cshare;
  VerificationKey vk;
};

/// x uniform; theta uniform per block, resampled while all ones.
Share bk_split(std::size_t lambda, const Bits& secret, Rng& rng);
/// Deterministic split from explicit x and theta (lambda * |secret| bits).
Share bk_split_with(const Bits& x, const Bits& theta, const Bits& secret);

/// Measures the theta = 0 positions computationally and unmasks.
Bits bk_reconstruct(qsim::ProductShare& qshare, const ClassicalShare& cshare, Rng& rng);
/// Hadamard measurement of every position.
Bits bk_delete(qsim::ProductShare& qshare, Rng& rng);
/// Throws std::invalid_argument on a length mismatch.
bool bk_verify(const VerificationKey& vk, const Bits& cert);

Bits bytes_to_bits(const Bytes& bytes);
Bytes bits_to_bytes(const Bits& bits);

/// Byte encoding of a classical share, used when it is itself secret shared.
Bytes encode_classical(const ClassicalShare& c);
/// Throws std::invalid_argument on malformed input.
ClassicalShare decode_classical(const Bytes& bytes);

// ---------------------------------------------------------------------------
// Exact small-instance analysis for a single secret bit.

/// Statistical distance between the (certificate, classical share) views of
/// an honest deleter for s = 0 and s = 1, by exhaustive enumeration of x,
/// theta and the measurement outcomes (lambda <= 12).
double honest_delete_view_distance(std::size_t lambda);

struct CheatAnalysis {
  double acceptance;
  double advantage;
};

/// The cheater Hadamard-measures every position except `skipped`, measures
/// that one computationally and reports the outcome as its certificate
/// entry; after verification it sees the classical share. Exact acceptance
/// probability and distinguishing advantage of its output view, computed
/// by dense simulation of every (x, theta) (lambda <= 8).
CheatAnalysis skip_one_dense(std::size_t lambda, std::size_t skipped = 0);
/// Closed form of the same quantities.
CheatAnalysis skip_one_closed_form(std::size_t lambda);

/// Probability that reconstruction on a (possibly disturbed) single-bit
/// share returns `secret`, from its dense embedding.
double reconstruct_probability(const qsim::ProductShare& qshare, const ClassicalShare& cshare,
                               std::uint8_t secret);

}  // namespace sscd::bk
