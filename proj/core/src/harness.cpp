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

#include "sscd/harness.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>

namespace sscd::harness {

double hypergeometric_pmf(std::size_t t, std::size_t r, std::size_t g, std::size_t h) {
  if (r > t || g > t) throw std::invalid_argument("need r, g <= t");
  if (h > r || h > g || g - h > t - r) return 0.0;
  auto lc = [](std::size_t n, std::size_t k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  };
  return std::exp(lc(r, h) + lc(t - r, g - h) - lc(t, g));
}

double cheat_acceptance_exact(std::size_t t, std::size_t r, std::size_t g, std::uint64_t q) {
  if (r > t || g > t) throw std::invalid_argument("need 0 <= g <= t and r <= t");
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  double acc = 0;
  for (std::size_t h = 0; h <= std::min(r, g); ++h) {
    acc += hypergeometric_pmf(t, r, g, h) * std::pow(static_cast<double>(q), -static_cast<double>(h));
  }
  return acc;
}

double hoeffding_bound(double t, double r, double ell) {
  if (t <= 0 || r <= 0 || ell <= 0) throw std::invalid_argument("hoeffding bound needs positive inputs");
  return 2.0 * std::exp(-r * ell * ell / (2.0 * t * t));
}

double hoeffding_bound_for_lambda(double lambda) {
  const double l = std::log2(lambda);
  return 2.0 * std::exp(-l * l / 2.0);
}

const char* to_string(StrategyKind k) {
  switch (k) {
    case StrategyKind::honest_delete: return "honest_delete";
    case StrategyKind::corrupt_all_then_end: return "corrupt_all_then_end";
    case StrategyKind::guess_g_cheater: return "guess_g_cheater";
    case StrategyKind::corrupt_delete_retain: return "corrupt_delete_retain";
    case StrategyKind::scripted: return "scripted";
  }
  return "?";
}

StrategyKind strategy_kind_from_string(const std::string& s) {
  for (auto k : {StrategyKind::honest_delete, StrategyKind::corrupt_all_then_end, StrategyKind::guess_g_cheater,
                 StrategyKind::corrupt_delete_retain, StrategyKind::scripted}) {
    if (s == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown strategy: " + s);
}

const char* to_string(ScriptStep::Op op) {
  switch (op) {
    case ScriptStep::Op::corrupt: return "corrupt";
    case ScriptStep::Op::delete_honest: return "delete_honest";
    case ScriptStep::Op::delete_retain: return "delete_retain";
    case ScriptStep::Op::end: return "end";
  }
  return "?";
}

ScriptStep::Op script_op_from_string(const std::string& s) {
  for (auto op : {ScriptStep::Op::corrupt, ScriptStep::Op::delete_honest, ScriptStep::Op::delete_retain,
                  ScriptStep::Op::end}) {
    if (s == to_string(op)) return op;
  }
  throw std::invalid_argument("unknown script step: " + s);
}

void validate_strategy(const Strategy& s, std::size_t n, std::size_t t) {
  if (s.kind == StrategyKind::guess_g_cheater && s.g > t) throw std::invalid_argument("g exceeds t");
  if (s.kind == StrategyKind::scripted) {
    for (const auto& step : s.script) {
      if (step.op != ScriptStep::Op::end && (step.index < 1 || step.index > n)) {
        throw std::invalid_argument("scripted step references share " + std::to_string(step.index));
      }
    }
  }
}

game::Bytes encode_value(gf::Value v) {
  return {static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(v >> 8), static_cast<std::uint8_t>(v >> 16),
          static_cast<std::uint8_t>(v >> 24)};
}

std::optional<gf::Value> decode_value(const game::Bytes& b) {
  if (b.size() != 4) return std::nullopt;
  return gf::Value{b[0]} | gf::Value{b[1]} << 8 | gf::Value{b[2]} << 16 | gf::Value{b[3]} << 24;
}

namespace {

// Strategies are scripts; the built-in kinds expand to fixed scripts, with
// two extra operations the config format does not expose.
enum class Op { corrupt, delete_honest, delete_retain, delete_guess, end, end_decode };
struct Step {
  Op op;
  std::size_t index;
};

std::deque<Step> expand(const Strategy& s, std::size_t n, std::size_t k) {
  std::deque<Step> out;
  switch (s.kind) {
    case StrategyKind::honest_delete:
      for (std::size_t i = 1; i <= n; ++i) {
        out.push_back({Op::corrupt, i});
        out.push_back({Op::delete_honest, i});
      }
      out.push_back({Op::end, 0});
      break;
    case StrategyKind::corrupt_all_then_end:
      for (std::size_t i = 1; i <= n; ++i) out.push_back({Op::corrupt, i});
      out.push_back({Op::end, 0});
      break;
    case StrategyKind::guess_g_cheater:
      out.push_back({Op::corrupt, 1});
      out.push_back({Op::delete_guess, 1});
      out.push_back({Op::end, 0});
      break;
    case StrategyKind::corrupt_delete_retain:
      for (std::size_t i = 1; i <= n; ++i) {
        out.push_back({Op::corrupt, i});
        out.push_back({Op::delete_retain, i});
      }
      out.push_back({Op::end_decode, 0});
      break;
    case StrategyKind::scripted:
      for (const auto& st : s.script) {
        Op op = st.op == ScriptStep::Op::corrupt         ? Op::corrupt
                : st.op == ScriptStep::Op::delete_honest ? Op::delete_honest
                : st.op == ScriptStep::Op::delete_retain ? Op::delete_retain
                                                         : Op::end;
        out.push_back({op, st.index});
      }
      if (out.empty() || out.back().op != Op::end) out.push_back({Op::end, 0});
      break;
  }
  (void)k;
  return out;
}

class AcdScript : public acd::Adversary {
 public:
  AcdScript(std::deque<Step> steps, acd::AcdParams p, std::size_t g) : steps_(std::move(steps)), p_(p), g_(g) {}

  game::Action<acd::Certificate> next(std::map<std::size_t, acd::AcdShare>& held, const game::GameState&,
                                      Rng& rng) override {
    using A = game::Action<acd::Certificate>;
    if (steps_.empty()) return A::end_with({});
    Step s = steps_.front();
    steps_.pop_front();
    switch (s.op) {
      case Op::corrupt: return A::corrupt(s.index);
      case Op::delete_honest: return A::remove(s.index, acd::acd_delete(held.at(s.index), rng));
      case Op::delete_retain: {
        auto vals = held.at(s.index).positions.measure_all(qsim::Basis::computational, rng);
        retained_[s.index] = vals;
        return A::remove(s.index, std::move(vals));
      }
      case Op::delete_guess: {
        auto& share = held.at(s.index).positions;
        acd::Certificate cert(share.size());
        for (std::size_t j = 0; j < share.size(); ++j) {
          if (j < g_) {
            share.measure(j, qsim::Basis::computational, rng);
            cert[j] = static_cast<gf::Value>(uniform_below(rng, share.field().order()));
          } else {
            cert[j] = share.measure(j, qsim::Basis::fourier, rng);
          }
        }
        return A::remove(s.index, std::move(cert));
      }
      case Op::end: return A::end_with({});
      case Op::end_decode: return A::end_with(decode());
    }
    return A::end_with({});
  }

 private:
  game::Bytes decode() const {
    if (retained_.size() < p_.k) return {};
    std::vector<gf::EvalPoint> pts;
    std::size_t used = 0;
    for (const auto& [i, vals] : retained_) {
      if (used++ == p_.k) break;
      for (std::size_t j = 1; j <= p_.t; ++j) pts.push_back({p_.field->from_integer(acd::eval_index(p_, i, j)), vals[j - 1]});
    }
    auto f = gf::rs_correct(*p_.field, p_.deg_p, pts);
    return f ? encode_value(f->coeff(0)) : game::Bytes{};
  }

  std::deque<Step> steps_;
  acd::AcdParams p_;
  std::size_t g_;
  std::map<std::size_t, std::vector<gf::Value>> retained_;
};

class NscdScript : public NscdAdversary {
 public:
  NscdScript(std::deque<Step> steps, access::AccessStructure a, css::SchemeTag scheme)
      : steps_(std::move(steps)), a_(std::move(a)), scheme_(scheme) {}

  game::Action<nscd::Certificate> next(std::map<std::size_t, nscd::NscdShare>& held, const game::GameState&,
                                       Rng& rng) override {
    using A = game::Action<nscd::Certificate>;
    if (steps_.empty()) return A::end_with({});
    Step s = steps_.front();
    steps_.pop_front();
    switch (s.op) {
      case Op::corrupt: return A::corrupt(s.index);
      case Op::delete_honest: return A::remove(s.index, nscd::nscd_delete(held.at(s.index), rng));
      case Op::delete_retain: return A::remove(s.index, retain(held, s.index, rng));
      case Op::delete_guess: throw std::invalid_argument("guess_g_cheater applies to acd only");
      case Op::end: return A::end_with({});
      case Op::end_decode: {
        if (!a_.is_authorized(keys_of(learned_))) return A::end_with({});
        auto s2 = css::creconstruct(a_, scheme_, learned_);
        return A::end_with(s2 ? *s2 : game::Bytes{});
      }
    }
    return A::end_with({});
  }

 private:
  static access::PartySet keys_of(const css::ShareMap& m) {
    access::PartySet out;
    for (const auto& [i, v] : m) out.push_back(i);
    return out;
  }

  // Rebuild the classical half of share i's 2-of-2 instance from every slice
  // held so far. When that works, measure the data positions (learning the
  // outer share) and then delete, which still certifies the untouched check
  // positions. Otherwise fall back to an honest deletion.
  nscd::Certificate retain(std::map<std::size_t, nscd::NscdShare>& held, std::size_t i, Rng& rng) {
    css::ShareMap slices;
    for (const auto& [j, sh] : held) slices[j] = sh.classical_slice.at(i - 1);
    if (a_.is_authorized(keys_of(slices))) {
      if (auto enc = css::creconstruct(a_, scheme_, slices)) {
        try {
          auto cshare = bk::decode_classical(*enc);
          learned_[i] = bk::bits_to_bytes(bk::bk_reconstruct(held.at(i).qshare, cshare, rng));
        } catch (const std::invalid_argument&) {
        }
      }
    }
    return nscd::nscd_delete(held.at(i), rng);
  }

  std::deque<Step> steps_;
  access::AccessStructure a_;
  css::SchemeTag scheme_;
  css::ShareMap learned_;
};

}  // namespace

std::unique_ptr<acd::Adversary> make_acd_adversary(const Strategy& s, const acd::AcdParams& p) {
  validate_strategy(s, p.n, p.t);
  return std::make_unique<AcdScript>(expand(s, p.n, p.k), p, s.g);
}

std::unique_ptr<NscdAdversary> make_nscd_adversary(const Strategy& s, const access::AccessStructure& a,
                                                   css::SchemeTag scheme) {
  if (s.kind == StrategyKind::guess_g_cheater) throw std::invalid_argument("guess_g_cheater applies to acd only");
  validate_strategy(s, a.n(), 0);
  return std::make_unique<NscdScript>(expand(s, a.n(), a.is_threshold() ? a.k() : 0), a, scheme);
}

game::Transcript run_nscd_adaptive_game(const access::AccessStructure& a, std::size_t lambda,
                                        const nscd::Bytes& secret, NscdAdversary& adversary, Rng& rng,
                                        const nscd::NscdOptions& opts) {
  nscd::NscdDealing d = nscd::nscd_split(a, lambda, secret, rng, opts);
  const nscd::NscdKeys& keys = d.keys;
  std::function<bool(std::size_t, const nscd::Certificate&)> verify = [&keys](std::size_t i,
                                                                              const nscd::Certificate& c) {
    if (c.size() != keys.vk.at(i - 1).x.size()) return false;
    return nscd::nscd_verify(keys, i, c);
  };
  return game::run_adaptive_game<nscd::NscdShare, nscd::Certificate>(a, std::move(d.shares), verify, adversary,
                                                                       rng);
}

GuessEstimate simulate_guess_cheater(std::size_t t, std::size_t r, std::size_t g, const gf::Field& field,
                                     std::size_t ell, std::size_t trials, Rng& rng) {
  if (r > t || g > t) throw std::invalid_argument("need r, g <= t");
  const std::size_t q = field.order();
  std::size_t accepted = 0, tail = 0;
  std::vector<std::size_t> order(t);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<bool> is_check(t, false);
    for (std::size_t c = 0; c < r; ++c) is_check[order[c]] = true;

    acd::ShareKey key;
    acd::AcdShare share;
    share.index = 1;
    share.positions = qsim::ProductShare(field);
    for (std::size_t j = 0; j < t; ++j) {
      const auto v = static_cast<gf::Value>(uniform_below(rng, q));
      if (is_check[j]) {
        share.positions.push_back({qsim::Basis::fourier, v});
        key.checks.emplace_back(j + 1, v);
      } else {
        share.positions.push_back({qsim::Basis::computational, v});
        key.data.push_back(j + 1);
      }
    }
    acd::Certificate cert(t);
    std::size_t mismatches = 0;
    for (std::size_t j = 0; j < t; ++j) {
      if (j < g) {
        share.positions.measure(j, qsim::Basis::computational, rng);
        cert[j] = static_cast<gf::Value>(uniform_below(rng, q));
        // the challenger's Hadamard value at a measured data position is uniform
        if (!is_check[j] && cert[j] != static_cast<gf::Value>(uniform_below(rng, q))) ++mismatches;
      } else {
        cert[j] = share.positions.measure(j, qsim::Basis::fourier, rng);
      }
    }
    const bool ok = acd::acd_verify(acd::AcdVerificationKey{{key}}, 1, cert);
    accepted += ok;
    tail += ok && 2 * mismatches >= ell;
  }
  return {static_cast<double>(accepted) / static_cast<double>(trials),
          static_cast<double>(tail) / static_cast<double>(trials), trials};
}

bool within_sigma(double estimate, double exact, std::size_t trials, double sigmas) {
  const double sigma = std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials));
  if (sigma == 0) return estimate == exact;
  return std::abs(estimate - exact) <= sigmas * sigma;
}

namespace {

access::AccessStructure structure_of(const ExperimentConfig& c) {
  if (!c.minimal.empty()) return access::AccessStructure::general(c.n, c.minimal);
  return access::AccessStructure::threshold(c.k, c.n);
}

acd::AcdParams acd_params_of(const ExperimentConfig& c) {
  if (c.variant == acd::Variant::manual) {
    const gf::Field* f = c.field_degree ? &gf::Field::get(2, *c.field_degree) : nullptr;
    return acd::manual_params(c.n, c.k, c.t, c.r, c.ell, f);
  }
  return acd::derive_params(c.lambda, c.n, c.k, c.variant);
}

Metric upper_metric(std::string name, std::size_t hits, std::size_t trials, double exact) {
  Metric m{std::move(name), static_cast<double>(hits) / trials, trials, exact, {}, "estimate <= exact + 4 sigma", true};
  const double sigma = std::sqrt(exact * (1 - exact) / trials);
  m.pass = m.estimate <= exact + 4 * sigma;
  return m;
}

Metric exact_metric(std::string name, std::size_t hits, std::size_t trials, double exact) {
  Metric m{std::move(name), static_cast<double>(hits) / trials, trials, exact, {}, "within 4 sigma of exact", true};
  m.pass = within_sigma(m.estimate, exact, trials);
  return m;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& c) {
  if (c.scheme != "acd" && c.scheme != "nscd") throw ConfigError("scheme must be acd or nscd");
  if (c.trials == 0) throw ConfigError("trials must be positive");
  if (c.n == 0 || c.n > 12) throw ConfigError("n must be in [1, 12]");
  if (c.minimal.empty() && (c.k == 0 || c.k > c.n)) throw ConfigError("need 1 <= k <= n");

  ExperimentReport rep;
  rep.config = c;
  std::size_t aborted = 0, all_verified = 0, first_ok = 0, recovered = 0;

  try {
    if (c.scheme == "acd") {
      if (!c.minimal.empty()) throw ConfigError("acd supports threshold structures only");
      const acd::AcdParams p = acd_params_of(c);
      if (auto v = acd::validate_params(p); !v.ok) throw ConfigError("invalid acd parameters: " + v.diagnostic);
      validate_strategy(c.strategy, p.n, p.t);
      for (std::size_t i = 0; i < c.trials; ++i) {
        Rng rng = trial_rng(c.seed, i);
        const auto secret = static_cast<gf::Value>(uniform_below(rng, p.field->order()));
        auto adv = make_acd_adversary(c.strategy, p);
        const auto t = acd::run_acd_game(p, *adv, secret, rng);
        aborted += t.aborted;
        // a deletion is recorded only after its certificate verified
        first_ok += !t.deleted.empty();
        all_verified += !t.aborted && t.deleted.size() == p.n;
        recovered += !t.aborted && !t.outputs.empty() && t.outputs[0] == encode_value(secret);
      }
      const double q = p.field->order();
      switch (c.strategy.kind) {
        case StrategyKind::honest_delete:
          rep.metrics.push_back(exact_metric("deletion_correctness", all_verified, c.trials, 1.0));
          break;
        case StrategyKind::corrupt_all_then_end:
          rep.metrics.push_back(exact_metric("abort_rate", aborted, c.trials, 1.0));
          break;
        case StrategyKind::guess_g_cheater:
          rep.metrics.push_back(exact_metric("acceptance", first_ok, c.trials,
                                             cheat_acceptance_exact(p.t, p.r, c.strategy.g, p.field->order())));
          break;
        case StrategyKind::corrupt_delete_retain:
          rep.metrics.push_back(upper_metric("first_deletion_acceptance", first_ok, c.trials,
                                             cheat_acceptance_exact(p.t, p.r, p.t, p.field->order())));
          rep.metrics.push_back(upper_metric("secret_recovered", recovered, c.trials,
                                             std::pow(q, -static_cast<double>(p.k * p.r))));
          break;
        case StrategyKind::scripted:
          rep.metrics.push_back({"completed", 1.0 - static_cast<double>(aborted) / c.trials, c.trials, {}, {},
                                 "informational", true});
          break;
      }
    } else {
      const auto a = structure_of(c);
      if (c.strategy.kind == StrategyKind::guess_g_cheater) throw ConfigError("guess_g_cheater applies to acd only");
      validate_strategy(c.strategy, a.n(), 0);
      nscd::NscdOptions opts;
      opts.insecure_kappa = c.insecure_kappa;
      const auto scheme = css::default_scheme(a);
      for (std::size_t i = 0; i < c.trials; ++i) {
        Rng rng = trial_rng(c.seed, i);
        const nscd::Bytes secret{static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng())};
        auto adv = make_nscd_adversary(c.strategy, a, scheme);
        const auto t = run_nscd_adaptive_game(a, c.lambda, secret, *adv, rng, opts);
        aborted += t.aborted;
        all_verified += !t.aborted && t.deleted.size() == a.n();
        first_ok += !t.deleted.empty();
        recovered += !t.aborted && !t.outputs.empty() && t.outputs[0] == secret;
      }
      switch (c.strategy.kind) {
        case StrategyKind::honest_delete:
          rep.metrics.push_back(exact_metric("deletion_correctness", all_verified, c.trials, 1.0));
          break;
        case StrategyKind::corrupt_all_then_end:
          rep.metrics.push_back(exact_metric("abort_rate", aborted, c.trials, 1.0));
          break;
        case StrategyKind::corrupt_delete_retain:
          rep.metrics.push_back(exact_metric("secret_recovered", recovered, c.trials, 1.0));
          break;
        default:
          rep.metrics.push_back({"completed", 1.0 - static_cast<double>(aborted) / c.trials, c.trials, {}, {},
                                 "informational", true});
          break;
      }
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::logic_error& e) {
    throw ConfigError(e.what());
  }
  rep.pass = std::all_of(rep.metrics.begin(), rep.metrics.end(), [](const Metric& m) { return m.pass; });
  return rep;
}

}  // namespace sscd::harness
