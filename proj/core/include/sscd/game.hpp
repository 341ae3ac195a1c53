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

// Bookkeeping and the round loop of the adaptive certified-deletion game:
// the adversary corrupts shares and deletes them with certificates, and the
// challenger aborts as soon as a certificate fails or the corrupted but
// undeleted shares form an authorized set.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sscd/access.hpp"
#include "sscd/random.hpp"

namespace sscd::game {

using Bytes = std::vector<std::uint8_t>;

enum class EventKind : std::uint8_t { corrupt, verify, delete_share, abort, end, output };
const char* to_string(EventKind k);
EventKind event_kind_from_string(const std::string& s);

struct Event {
  EventKind kind;
  std::size_t share = 0;  // 0 when not about one share
  bool ok = true;         // verify outcome
  std::string detail;
  friend bool operator==(const Event&, const Event&) = default;
};

struct Transcript {
  std::vector<Event> events;
  bool aborted = false;
  std::string abort_reason;
  std::vector<std::size_t> corrupted;  // c_1, c_2, ... in order
  std::vector<std::size_t> deleted;    // d_1, d_2, ... in order
  std::vector<Bytes> outputs;          // empty when aborted
  friend bool operator==(const Transcript&, const Transcript&) = default;
};

enum class Custody : std::uint8_t { intact, corrupted, deleted };

class GameState {
 public:
  explicit GameState(access::AccessStructure a);

  const access::AccessStructure& structure() const { return a_; }
  const Transcript& transcript() const { return t_; }
  Transcript release() { return std::move(t_); }
  bool aborted() const { return t_.aborted; }
  bool finished() const { return finished_; }
  Custody custody(std::size_t i) const { return custody_.at(i - 1); }
  /// Corrupted and not yet deleted.
  access::Mask live_mask() const;
  std::size_t live_count() const;

  /// Illegal moves (unknown index, corrupting twice, deleting a share not
  /// held, acting after the game ended) throw std::logic_error.
  void corrupt(std::size_t i);
  void record_deletion(std::size_t i, bool verified);
  void end(std::vector<Bytes> outputs);

 private:
  void abort(std::string reason);
  void require_running() const;

  access::AccessStructure a_;
  std::vector<Custody> custody_;
  Transcript t_;
  bool finished_ = false;
};

template <class Cert>
struct Action {
  enum class Kind { end, corrupt, delete_share } kind = Kind::end;
  std::size_t index = 0;
  Cert cert{};
  Bytes output;

  static Action end_with(Bytes out) { return {Kind::end, 0, Cert{}, std::move(out)}; }
  static Action corrupt(std::size_t i) { return {Kind::corrupt, i, Cert{}, {}}; }
  static Action remove(std::size_t i, Cert c) { return {Kind::delete_share, i, std::move(c), {}}; }
};

/// An adaptive adversary. `held` contains every share it has corrupted,
/// including the residual registers of shares it already deleted.
template <class Share, class Cert>
class AdaptiveAdversary {
 public:
  virtual ~AdaptiveAdversary() = default;
  virtual Action<Cert> next(std::map<std::size_t, Share>& held, const GameState& state, Rng& rng) = 0;
};

template <class Share, class Cert>
Transcript run_adaptive_game(const access::AccessStructure& a, std::vector<Share> shares,
                             const std::function<bool(std::size_t, const Cert&)>& verify,
                             AdaptiveAdversary<Share, Cert>& adversary, Rng& rng,
                             std::size_t max_rounds = 4096) {
  if (shares.size() != a.n()) throw std::invalid_argument("one share per party expected");
  GameState state(a);
  std::map<std::size_t, Share> held;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    Action<Cert> act = adversary.next(held, state, rng);
    switch (act.kind) {
      case Action<Cert>::Kind::end:
        state.end({std::move(act.output)});
        return state.release();
      case Action<Cert>::Kind::corrupt:
        state.corrupt(act.index);
        held.emplace(act.index, std::move(shares[act.index - 1]));
        break;
      case Action<Cert>::Kind::delete_share: {
        if (state.custody(act.index) != Custody::corrupted) {
          throw std::logic_error("deleting a share that is not held");
        }
        state.record_deletion(act.index, verify(act.index, act.cert));
        break;
      }
    }
    if (state.aborted()) return state.release();
  }
  throw std::runtime_error("adversary exceeded the round limit");
}

}  // namespace sscd::game
