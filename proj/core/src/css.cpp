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

#include "sscd/css.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sscd/gf.hpp"

namespace sscd::css {
namespace {

const gf::Field& byte_field() { return gf::Field::get(2, 8); }

Bytes random_bytes(std::size_t len, Rng& rng) {
  Bytes out(len);
  std::uniform_int_distribution<int> d(0, 255);
  for (auto& b : out) b = static_cast<std::uint8_t>(d(rng));
  return out;
}

// Replica j is the pad attached to maximal unauthorized set T_j; party i
// holds it iff i is not in T_j.
struct ReplicaLayout {
  std::vector<access::Mask> unauthorized;
  std::vector<std::vector<std::size_t>> held_by_party;  // party-1 -> replica ids
};

ReplicaLayout replica_layout(const access::AccessStructure& a) {
  ReplicaLayout l;
  for (const auto& t : a.maximal_unauthorized()) l.unauthorized.push_back(access::to_mask(t, a.n()));
  l.held_by_party.resize(a.n());
  for (std::size_t j = 0; j < l.unauthorized.size(); ++j) {
    for (std::size_t i = 0; i < a.n(); ++i) {
      if (!(l.unauthorized[j] >> i & 1u)) l.held_by_party[i].push_back(j);
    }
  }
  return l;
}

void check_shamir(const access::AccessStructure& a) {
  if (!a.is_threshold()) throw std::invalid_argument("Shamir sharing needs a threshold structure");
  if (a.n() > 255) throw std::invalid_argument("Shamir over GF(2^8) supports at most 255 parties");
}

}  // namespace

const char* to_string(SchemeTag tag) { return tag == SchemeTag::shamir ? "shamir" : "replicated"; }

SchemeTag scheme_tag_from_string(const std::string& s) {
  if (s == "shamir") return SchemeTag::shamir;
  if (s == "replicated") return SchemeTag::replicated;
  throw std::invalid_argument("unknown classical scheme '" + s + "'");
}

SchemeTag default_scheme(const access::AccessStructure& a) {
  return a.is_threshold() ? SchemeTag::shamir : SchemeTag::replicated;
}

ShareMap ClassicalShareSet::restrict_to(std::span<const std::size_t> parties) const {
  ShareMap out;
  for (auto p : parties) {
    if (p < 1 || p > shares.size()) throw std::out_of_range("party index");
    out[p] = shares[p - 1];
  }
  return out;
}

ClassicalShareSet csplit(const access::AccessStructure& a, std::span<const std::uint8_t> secret,
                         Rng& rng, std::optional<SchemeTag> scheme) {
  if (secret.empty()) throw std::invalid_argument("secret must be nonempty");
  const SchemeTag tag = scheme.value_or(default_scheme(a));
  ClassicalShareSet out{a, tag, std::vector<Bytes>(a.n())};

  if (tag == SchemeTag::shamir) {
    check_shamir(a);
    const gf::Field& f = byte_field();
    const std::size_t k = a.k();
    for (auto& s : out.shares) s.resize(secret.size());
    std::vector<gf::Value> coeffs(k);
    for (std::size_t b = 0; b < secret.size(); ++b) {
      coeffs[0] = secret[b];
      for (std::size_t j = 1; j < k; ++j) coeffs[j] = static_cast<gf::Value>(uniform_below(rng, 256));
      const gf::Polynomial poly(f, coeffs);
      for (std::size_t i = 0; i < a.n(); ++i) {
        out.shares[i][b] = static_cast<std::uint8_t>(poly.eval(static_cast<gf::Value>(i + 1)));
      }
    }
    return out;
  }

  const ReplicaLayout layout = replica_layout(a);
  std::vector<Bytes> pads(layout.unauthorized.size());
  Bytes last(secret.begin(), secret.end());
  for (std::size_t j = 0; j + 1 < pads.size(); ++j) {
    pads[j] = random_bytes(secret.size(), rng);
    for (std::size_t b = 0; b < last.size(); ++b) last[b] ^= pads[j][b];
  }
  pads.back() = std::move(last);
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (auto j : layout.held_by_party[i]) {
      out.shares[i].insert(out.shares[i].end(), pads[j].begin(), pads[j].end());
    }
  }
  return out;
}

std::optional<Bytes> creconstruct(const access::AccessStructure& a, SchemeTag scheme,
                                  const ShareMap& shares) {
  std::vector<std::size_t> parties;
  for (const auto& [p, _] : shares) parties.push_back(p);
  if (!a.is_authorized(parties)) return std::nullopt;

  if (scheme == SchemeTag::shamir) {
    check_shamir(a);
    const gf::Field& f = byte_field();
    // The k smallest indices; any k points determine the polynomial.
    std::vector<gf::Value> xs;
    std::vector<const Bytes*> rows;
    for (const auto& [p, s] : shares) {
      if (xs.size() == a.k()) break;
      xs.push_back(static_cast<gf::Value>(p));
      rows.push_back(&s);
    }
    const std::size_t len = rows.front()->size();
    if (std::any_of(rows.begin(), rows.end(), [&](const Bytes* r) { return r->size() != len; })) {
      return std::nullopt;
    }
    const std::vector<gf::Value> zero{0};
    const gf::FieldMatrix lagrange = gf::interpolation_matrix(f, xs.size() - 1, xs, zero);
    Bytes secret(len);
    for (std::size_t b = 0; b < len; ++b) {
      gf::Value acc = 0;
      for (std::size_t j = 0; j < xs.size(); ++j) acc ^= f.mul(lagrange.at(0, j), (*rows[j])[b]);
      secret[b] = static_cast<std::uint8_t>(acc);
    }
    return secret;
  }

  const ReplicaLayout layout = replica_layout(a);
  std::size_t len = 0;
  bool len_known = false;
  for (const auto& [p, s] : shares) {
    const std::size_t count = layout.held_by_party[p - 1].size();
    if (count == 0) continue;
    if (s.size() % count != 0) return std::nullopt;
    if (len_known && s.size() / count != len) return std::nullopt;
    len = s.size() / count;
    len_known = true;
  }
  if (!len_known || len == 0) return std::nullopt;
  Bytes secret(len, 0);
  for (std::size_t j = 0; j < layout.unauthorized.size(); ++j) {
    bool found = false;
    for (const auto& [p, s] : shares) {
      const auto& held = layout.held_by_party[p - 1];
      const auto it = std::find(held.begin(), held.end(), j);
      if (it == held.end()) continue;
      const std::size_t offset = static_cast<std::size_t>(it - held.begin()) * len;
      for (std::size_t b = 0; b < len; ++b) secret[b] ^= s[offset + b];
      found = true;
      break;
    }
    if (!found) return std::nullopt;  // unreachable for authorized sets
  }
  return secret;
}

ShareMap csim(const access::AccessStructure& a, SchemeTag scheme,
              std::span<const std::size_t> parties, std::size_t secret_len, Rng& rng) {
  if (a.is_authorized(parties)) throw std::invalid_argument("csim needs an unauthorized set");
  ShareMap out;
  if (scheme == SchemeTag::shamir) {
    check_shamir(a);
    for (auto p : parties) out[p] = random_bytes(secret_len, rng);
    return out;
  }
  // Every replica visible to an unauthorized set is an independent uniform
  // pad: the set sits inside some T_j whose pad stays hidden.
  const ReplicaLayout layout = replica_layout(a);
  std::map<std::size_t, Bytes> pads;
  for (auto p : parties) {
    Bytes s;
    for (auto j : layout.held_by_party[p - 1]) {
      auto it = pads.find(j);
      if (it == pads.end()) it = pads.emplace(j, random_bytes(secret_len, rng)).first;
      s.insert(s.end(), it->second.begin(), it->second.end());
    }
    out[p] = std::move(s);
  }
  return out;
}

}  // namespace sscd::css
