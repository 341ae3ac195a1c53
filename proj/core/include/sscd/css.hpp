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

// Classical secret sharing: Shamir over GF(2^8) for threshold structures and
// replicated (CNF) sharing for general monotone structures.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sscd/access.hpp"
#include "sscd/random.hpp"

namespace sscd::css {

using Bytes = std::vector<std::uint8_t>;
/// Party index (1-based) to share bytes.
using ShareMap = std::map<std::size_t, Bytes>;

enum class SchemeTag : std::uint8_t { shamir = 0, replicated = 1 };

const char* to_string(SchemeTag tag);
SchemeTag scheme_tag_from_string(const std::string& s);

/// Shamir for threshold structures, replicated otherwise.
SchemeTag default_scheme(const access::AccessStructure& a);

struct ClassicalShareSet {
  access::AccessStructure structure;
  SchemeTag scheme;
  std::vector<Bytes> shares;  // shares[i-1] belongs to party i

  ShareMap restrict_to(std::span<const std::size_t> parties) const;
};

/// Shamir needs a threshold structure with n <= 255. Replicated works for
/// any structure with n <= 12. Throws std::invalid_argument on an empty
/// secret or an unsupported scheme/structure pair.
ClassicalShareSet csplit(const access::AccessStructure& a, std::span<const std::uint8_t> secret,
                         Rng& rng, std::optional<SchemeTag> scheme = std::nullopt);

/// The secret, or nullopt when the parties present are unauthorized or the
/// shares are malformed.
std::optional<Bytes> creconstruct(const access::AccessStructure& a, SchemeTag scheme,
                                  const ShareMap& shares);

/// Shares for the unauthorized set `parties`, distributed exactly as the
/// restriction of csplit for any secret of `secret_len` bytes. Throws
/// std::invalid_argument if `parties` is authorized.
ShareMap csim(const access::AccessStructure& a, SchemeTag scheme,
              std::span<const std::size_t> parties, std::size_t secret_len, Rng& rng);

}  // namespace sscd::css
