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

// Monotone access structures over parties 1..n.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sscd::access {

/// Sorted 1-based party indices.
using PartySet = std::vector<std::size_t>;
/// Bit i-1 set iff party i is present.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxParties = 63;
inline constexpr std::size_t kMaxExhaustiveParties = 12;

Mask to_mask(std::span<const std::size_t> parties, std::size_t n);
PartySet from_mask(Mask m);

class AccessStructure {
 public:
  enum class Kind { threshold, general };

  /// Throws std::invalid_argument unless 1 <= k <= n <= kMaxParties.
  static AccessStructure threshold(std::size_t k, std::size_t n);
  /// Minimal authorized sets must be a nonempty antichain over [n].
  static AccessStructure general(std::size_t n, std::vector<PartySet> minimal);

  Kind kind() const { return kind_; }
  bool is_threshold() const { return kind_ == Kind::threshold; }
  std::size_t n() const { return n_; }
  /// Threshold only.
  std::size_t k() const { return k_; }
  /// General only: minimal authorized sets, sorted.
  const std::vector<PartySet>& minimal() const { return minimal_; }

  /// Throws std::out_of_range on a party outside [n].
  bool is_authorized(std::span<const std::size_t> parties) const;
  bool is_authorized(Mask m) const;

  /// True iff `blocks` partition [n] and no block is authorized. Throws
  /// std::invalid_argument when the blocks overlap or miss a party.
  bool is_admissible_partition(const std::vector<PartySet>& blocks) const;

  /// Unauthorized sets all of whose strict supersets are authorized, in
  /// increasing mask order. Throws std::length_error for n > 12.
  std::vector<PartySet> maximal_unauthorized() const;

  std::string describe() const;

  friend bool operator==(const AccessStructure& a, const AccessStructure& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.k_ == b.k_ && a.minimal_ == b.minimal_;
  }

 private:
  AccessStructure() = default;
  Kind kind_ = Kind::threshold;
  std::size_t n_ = 1;
  std::size_t k_ = 1;
  std::vector<PartySet> minimal_;
  std::vector<Mask> minimal_masks_;
};

}  // namespace sscd::access
