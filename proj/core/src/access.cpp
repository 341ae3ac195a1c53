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

#include "sscd/access.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sscd::access {

Mask to_mask(std::span<const std::size_t> parties, std::size_t n) {
  Mask m = 0;
  for (auto p : parties) {
    if (p < 1 || p > n) throw std::out_of_range("party " + std::to_string(p) + " outside [1, n]");
    m |= Mask{1} << (p - 1);
  }
  return m;
}

PartySet from_mask(Mask m) {
  PartySet out;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1u) out.push_back(i + 1);
  }
  return out;
}

AccessStructure AccessStructure::threshold(std::size_t k, std::size_t n) {
  if (n < 1 || n > kMaxParties) throw std::invalid_argument("n out of range");
  if (k < 1 || k > n) throw std::invalid_argument("threshold needs 1 <= k <= n");
  AccessStructure a;
  a.kind_ = Kind::threshold;
  a.n_ = n;
  a.k_ = k;
  return a;
}

AccessStructure AccessStructure::general(std::size_t n, std::vector<PartySet> minimal) {
  if (n < 1 || n > kMaxParties) throw std::invalid_argument("n out of range");
  if (minimal.empty()) throw std::invalid_argument("general structure needs a minimal authorized set");
  std::vector<Mask> masks;
  for (auto& s : minimal) {
    std::sort(s.begin(), s.end());
    if (s.empty()) throw std::invalid_argument("empty authorized set");
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("repeated party");
    masks.push_back(to_mask(s, n));
  }
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = 0; j < masks.size(); ++j) {
      if (i != j && (masks[i] & masks[j]) == masks[i]) {
        throw std::invalid_argument("minimal authorized sets must form an antichain");
      }
    }
  }
  std::vector<std::size_t> order(masks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return minimal[a] < minimal[b]; });
  AccessStructure a;
  a.kind_ = Kind::general;
  a.n_ = n;
  a.k_ = 0;
  for (auto i : order) {
    a.minimal_.push_back(minimal[i]);
    a.minimal_masks_.push_back(masks[i]);
  }
  return a;
}

bool AccessStructure::is_authorized(std::span<const std::size_t> parties) const {
  return is_authorized(to_mask(parties, n_));
}

bool AccessStructure::is_authorized(Mask m) const {
  if (n_ < 64 && (m >> n_) != 0) throw std::out_of_range("party outside [1, n]");
  if (kind_ == Kind::threshold) return static_cast<std::size_t>(std::popcount(m)) >= k_;
  for (auto s : minimal_masks_) {
    if ((m & s) == s) return true;
  }
  return false;
}

bool AccessStructure::is_admissible_partition(const std::vector<PartySet>& blocks) const {
  Mask seen = 0;
  std::vector<Mask> masks;
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block in partition");
    const Mask m = to_mask(b, n_);
    if (static_cast<std::size_t>(std::popcount(m)) != b.size() || (m & seen) != 0) {
      throw std::invalid_argument("partition blocks overlap");
    }
    seen |= m;
    masks.push_back(m);
  }
  const Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  if (seen != all) throw std::invalid_argument("partition does not cover every party");
  return std::none_of(masks.begin(), masks.end(), [&](Mask m) { return is_authorized(m); });
}

std::vector<PartySet> AccessStructure::maximal_unauthorized() const {
  if (n_ > kMaxExhaustiveParties) {
    throw std::length_error("maximal unauthorized enumeration limited to n <= 12");
  }
  std::vector<PartySet> out;
  const Mask all = (Mask{1} << n_) - 1;
  for (Mask m = 0; m <= all; ++m) {
    if (is_authorized(m)) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < n_ && maximal; ++i) {
      const Mask bit = Mask{1} << i;
      if (!(m & bit) && !is_authorized(m | bit)) maximal = false;
    }
    if (maximal) out.push_back(from_mask(m));
  }
  return out;
}

std::string AccessStructure::describe() const {
  if (kind_ == Kind::threshold) {
    return "threshold(" + std::to_string(k_) + "," + std::to_string(n_) + ")";
  }
  std::string s = "general(n=" + std::to_string(n_) + ";";
  for (std::size_t i = 0; i < minimal_.size(); ++i) {
    s += i ? " {" : "{";
    for (std::size_t j = 0; j < minimal_[i].size(); ++j) {
      s += (j ? "," : "") + std::to_string(minimal_[i][j]);
    }
    s += "}";
  }
  return s + ")";
}

}  // namespace sscd::access
