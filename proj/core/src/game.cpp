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

#include "sscd/game.hpp"

#include <bit>

namespace sscd::game {

const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::corrupt: return "corrupt";
    case EventKind::verify: return "verify";
    case EventKind::delete_share: return "delete";
    case EventKind::abort: return "abort";
    case EventKind::end: return "end";
    case EventKind::output: return "output";
  }
  return "?";
}

EventKind event_kind_from_string(const std::string& s) {
  for (auto k : {EventKind::corrupt, EventKind::verify, EventKind::delete_share, EventKind::abort,
                 EventKind::end, EventKind::output}) {
    if (s == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown event kind '" + s + "'");
}

GameState::GameState(access::AccessStructure a) : a_(std::move(a)), custody_(a_.n(), Custody::intact) {}

access::Mask GameState::live_mask() const {
  access::Mask m = 0;
  for (std::size_t i = 0; i < custody_.size(); ++i) {
    if (custody_[i] == Custody::corrupted) m |= access::Mask{1} << i;
  }
  return m;
}

std::size_t GameState::live_count() const { return static_cast<std::size_t>(std::popcount(live_mask())); }

void GameState::require_running() const {
  if (t_.aborted || finished_) throw std::logic_error("game already over");
}

void GameState::corrupt(std::size_t i) {
  require_running();
  if (i < 1 || i > a_.n()) throw std::logic_error("share index out of range");
  if (custody_[i - 1] != Custody::intact) throw std::logic_error("share already corrupted");
  custody_[i - 1] = Custody::corrupted;
  t_.corrupted.push_back(i);
  t_.events.push_back({EventKind::corrupt, i, true, ""});
  if (a_.is_authorized(live_mask())) abort("corrupted undeleted shares are authorized");
}

void GameState::record_deletion(std::size_t i, bool verified) {
  require_running();
  if (i < 1 || i > a_.n() || custody_[i - 1] != Custody::corrupted) {
    throw std::logic_error("deleting a share that is not held");
  }
  t_.events.push_back({EventKind::verify, i, verified, ""});
  if (!verified) {
    abort("certificate for share " + std::to_string(i) + " rejected");
    return;
  }
  custody_[i - 1] = Custody::deleted;
  t_.deleted.push_back(i);
  t_.events.push_back({EventKind::delete_share, i, true, ""});
}

void GameState::end(std::vector<Bytes> outputs) {
  require_running();
  finished_ = true;
  t_.events.push_back({EventKind::end, 0, true, ""});
  t_.events.push_back({EventKind::output, 0, true, ""});
  t_.outputs = std::move(outputs);
}

void GameState::abort(std::string reason) {
  t_.aborted = true;
  t_.abort_reason = reason;
  t_.events.push_back({EventKind::abort, 0, false, std::move(reason)});
  t_.outputs.clear();
}

}  // namespace sscd::game
