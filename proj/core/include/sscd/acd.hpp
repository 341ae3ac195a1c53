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

// Threshold secret sharing with adaptive certified deletion.
//
// The secret is f(0) for a random polynomial f of degree deg_p over a
// binary field K. Each of the n shares has t K-qudits: t' data positions
// holding f at distinct evaluation points in the computational basis and r
// check positions holding uniform values in the Hadamard basis. Any k
// shares give k*t points of which at most k*r are wrong, which Reed-Solomon
// correction removes when 2kr < kt - deg_p.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sscd/access.hpp"
#include "sscd/game.hpp"
#include "sscd/gf.hpp"
#include "sscd/qsim.hpp"
#include "sscd/random.hpp"

namespace sscd::acd {

using gf::Value;
using Certificate = std::vector<Value>;

enum class Variant { loose, tight, manual };
const char* to_string(Variant v);
Variant variant_from_string(const std::string& s);

struct AcdParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t t = 0;        // positions per share
  std::size_t r = 0;        // check positions per share
  std::size_t t_prime = 0;  // data positions per share
  std::size_t ell = 0;      // retained-information bound
  std::size_t deg_p = 0;    // polynomial degree
  const gf::Field* field = nullptr;
  std::size_t lambda = 0;   // 0 when not derived from a security parameter
  Variant variant = Variant::manual;
  friend bool operator==(const AcdParams&, const AcdParams&) = default;
};

/// Binary field with 2^ceil(log2(nt+1)) elements.
const gf::Field& share_field(std::size_t n, std::size_t t);

/// Parameters from the security parameter. r and t are rounded up, ell is
/// rounded up from the rounded t and deg_p follows. If rounding leaves the
/// correction inequality unsatisfied, t is increased one step at a time
/// (recomputing ell and deg_p) until it holds. Throws std::logic_error if
/// the result still fails validation.
AcdParams derive_params(std::size_t lambda, std::size_t n, std::size_t k, Variant variant);

/// Explicit t, r, ell; deg_p = (k-1)(t-r) + (n-k+1) ell. The field defaults
/// to share_field(n, t). Not validated.
AcdParams manual_params(std::size_t n, std::size_t k, std::size_t t, std::size_t r, std::size_t ell,
                        const gf::Field* field = nullptr);

struct Validation {
  bool ok;
  std::string diagnostic;  // first violated constraint, empty when ok
};
Validation validate_params(const AcdParams& p);

/// (i - 1) t + j for share i in [1, n] and position j in [1, t].
std::size_t eval_index(const AcdParams& p, std::size_t i, std::size_t j);

struct AcdShare {
  std::size_t index = 0;
  qsim::ProductShare positions{gf::Field::get(2, 1)};
  friend bool operator==(const AcdShare&, const AcdShare&) = default;
};

struct ShareKey {
  std::vector<std::size_t> data;                    // J_i, 1-based, sorted
  std::vector<std::pair<std::size_t, Value>> checks;  // (j, y_ij) for j not in J_i
  friend bool operator==(const ShareKey&, const ShareKey&) = default;
};

struct AcdVerificationKey {
  std::vector<ShareKey> shares;  // [i-1]
  friend bool operator==(const AcdVerificationKey&, const AcdVerificationKey&) = default;
};

struct AcdDealing {
  std::vector<AcdShare> shares;
  AcdVerificationKey vk;
  gf::Polynomial polynomial;  // dealer-private, kept for audits
};

/// Throws std::invalid_argument on invalid params or a secret outside K.
AcdDealing acd_split(const AcdParams& p, Value secret, Rng& rng);

struct ReconstructAudit {
  std::vector<std::size_t> chosen;  // the k share indices used
  std::vector<Value> xs;            // evaluation points as field elements
  std::vector<Value> ys;            // measured values
};

/// Reconstruction with one cached Reed-Solomon decoder per chosen index set.
class Reconstructor {
 public:
  explicit Reconstructor(AcdParams p);
  const AcdParams& params() const { return p_; }
  /// Measures the k lexicographically smallest shares computationally and
  /// corrects. nullopt when fewer than k shares are given or correction
  /// fails.
  std::optional<Value> operator()(std::vector<AcdShare> shares, Rng& rng, ReconstructAudit* audit = nullptr);

 private:
  const gf::ReedSolomonDecoder& decoder_for(const std::vector<std::size_t>& chosen);
  AcdParams p_;
  std::map<std::vector<std::size_t>, gf::ReedSolomonDecoder> cache_;
};

std::optional<Value> acd_reconstruct(const AcdParams& p, std::vector<AcdShare> shares, Rng& rng);

/// Hadamard measurement of every qubit, regrouped into t field elements.
Certificate acd_delete(AcdShare& share, Rng& rng);
/// Throws std::invalid_argument on a certificate of the wrong length and
/// std::out_of_range on a bad share index.
bool acd_verify(const AcdVerificationKey& vk, std::size_t i, const Certificate& cert);

using Adversary = game::AdaptiveAdversary<AcdShare, Certificate>;

game::Transcript run_acd_game(const AcdParams& p, Adversary& adversary, Value secret, Rng& rng);

/// One share in purified form: each position is a copy pair between the
/// challenger register C and the share register S. The adversary deletes
/// (honestly in the Hadamard basis, or dishonestly in the computational
/// basis), the challenger checks the certificate on the check positions
/// against its Hadamard measurement of C, then applies the deletion
/// predicate to the data positions of C.
struct PurifiedResult {
  bool verified;
  double predicate_probability;  // exact, from the projected state
  double expected;               // closed form
};
PurifiedResult purified_deletion_check(const gf::Field& field, std::size_t t, std::size_t r, std::size_t ell,
                                       bool honest, Rng& rng);

}  // namespace sscd::acd
