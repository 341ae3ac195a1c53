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

#include "sscd/serialize.hpp"

#include "json.hpp"

namespace sscd::io {

using nlohmann::json;

namespace {

json header(const char* type) { return json{{"format", "sscd"}, {"version", kFormatVersion}, {"type", type}}; }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("not valid JSON: ") + e.what());
  }
}

json open(const std::string& text, const std::string& type) {
  json j = parse(text);
  if (!j.is_object() || j.value("format", "") != "sscd") throw FormatError("missing \"format\": \"sscd\"");
  if (!j.contains("version") || !j["version"].is_number_integer()) throw FormatError("missing integer \"version\"");
  if (j["version"].get<int>() != kFormatVersion) {
    throw FormatError("unsupported version " + std::to_string(j["version"].get<int>()) + ", expected " +
                      std::to_string(kFormatVersion));
  }
  const std::string got = j.value("type", "");
  if (!type.empty() && got != type) throw FormatError("expected a \"" + type + "\" document, got \"" + got + "\"");
  return j;
}

template <class T>
T get(const json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("field \"") + key + "\" has the wrong type");
  }
}

json field_json(const gf::Field& f) { return json{{"p", f.characteristic()}, {"k", f.degree()}}; }

const gf::Field& field_from(const json& j) {
  const auto p = get<std::uint32_t>(j, "p");
  const auto k = get<std::uint32_t>(j, "k");
  try {
    return gf::Field::get(p, k);
  } catch (const std::exception& e) {
    throw FormatError(std::string("bad field: ") + e.what());
  }
}

std::string to_hex(const std::vector<std::uint8_t>& b) {
  static const char* d = "0123456789abcdef";
  std::string s;
  for (auto c : b) {
    s.push_back(d[c >> 4]);
    s.push_back(d[c & 15]);
  }
  return s;
}

std::vector<std::uint8_t> from_hex(const std::string& s) {
  if (s.size() % 2) throw FormatError("odd-length hex string");
  auto nib = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw FormatError("bad hex digit");
  };
  std::vector<std::uint8_t> out(s.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint8_t>(nib(s[2 * i]) << 4 | nib(s[2 * i + 1]));
  return out;
}

// Positions as a basis string ("c"/"f" per position) and a value array.
json product_json(const qsim::ProductShare& s) {
  std::string bases;
  std::vector<std::uint32_t> values;
  for (const auto& p : s.positions()) {
    bases.push_back(p.basis == qsim::Basis::computational ? 'c' : 'f');
    values.push_back(p.value);
  }
  return json{{"field", field_json(s.field())}, {"bases", bases}, {"values", values}};
}

qsim::ProductShare product_from(const json& j) {
  const gf::Field& f = field_from(get<json>(j, "field"));
  const auto bases = get<std::string>(j, "bases");
  const auto values = get<std::vector<std::uint32_t>>(j, "values");
  if (bases.size() != values.size()) throw FormatError("bases and values differ in length");
  std::vector<qsim::Position> pos;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (bases[i] != 'c' && bases[i] != 'f') throw FormatError("basis tag must be 'c' or 'f'");
    if (!f.contains(values[i])) throw FormatError("position value outside the field");
    pos.push_back({bases[i] == 'c' ? qsim::Basis::computational : qsim::Basis::fourier, values[i]});
  }
  return qsim::ProductShare(f, std::move(pos));
}

json strategy_json(const harness::Strategy& s) {
  json j{{"kind", harness::to_string(s.kind)}};
  if (s.kind == harness::StrategyKind::guess_g_cheater) j["g"] = s.g;
  if (s.kind == harness::StrategyKind::scripted) {
    json steps = json::array();
    for (const auto& st : s.script) steps.push_back(json{{"op", harness::to_string(st.op)}, {"index", st.index}});
    j["script"] = steps;
  }
  return j;
}

harness::Strategy strategy_from(const json& j) {
  harness::Strategy s;
  try {
    s.kind = harness::strategy_kind_from_string(get<std::string>(j, "kind"));
    s.g = j.value("g", std::size_t{0});
    if (j.contains("script")) {
      for (const auto& st : j["script"]) {
        s.script.push_back({harness::script_op_from_string(get<std::string>(st, "op")), st.value("index", std::size_t{0})});
      }
    }
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad strategy: ") + e.what());
  }
  return s;
}

json config_json(const harness::ExperimentConfig& c) {
  json j{{"scheme", c.scheme}, {"n", c.n},           {"k", c.k},         {"lambda", c.lambda},
         {"variant", acd::to_string(c.variant)},      {"t", c.t},         {"r", c.r},
         {"ell", c.ell},       {"strategy", strategy_json(c.strategy)}, {"trials", c.trials},
         {"seed", c.seed}};
  if (!c.minimal.empty()) j["minimal"] = c.minimal;
  if (c.field_degree) j["field_degree"] = *c.field_degree;
  if (c.insecure_kappa) j["insecure_kappa"] = *c.insecure_kappa;
  return j;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::string document_type(const std::string& text) { return open(text, "")["type"].get<std::string>(); }

std::string dump_acd_params(const acd::AcdParams& p) {
  json j = header("acd_params");
  j.update(json{{"n", p.n},           {"k", p.k},         {"t", p.t},           {"r", p.r},
                {"t_prime", p.t_prime}, {"ell", p.ell},   {"deg_p", p.deg_p},   {"lambda", p.lambda},
                {"variant", acd::to_string(p.variant)}, {"field", field_json(*p.field)}});
  return j.dump();
}

acd::AcdParams load_acd_params(const std::string& text) {
  json j = open(text, "acd_params");
  acd::AcdParams p;
  p.n = get<std::size_t>(j, "n");
  p.k = get<std::size_t>(j, "k");
  p.t = get<std::size_t>(j, "t");
  p.r = get<std::size_t>(j, "r");
  p.t_prime = get<std::size_t>(j, "t_prime");
  p.ell = get<std::size_t>(j, "ell");
  p.deg_p = get<std::size_t>(j, "deg_p");
  p.lambda = get<std::size_t>(j, "lambda");
  try {
    p.variant = acd::variant_from_string(get<std::string>(j, "variant"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  p.field = &field_from(get<json>(j, "field"));
  return p;
}

std::string dump_acd_share(const acd::AcdShare& s) {
  json j = header("acd_share");
  j["index"] = s.index;
  j["positions"] = product_json(s.positions);
  return j.dump();
}

acd::AcdShare load_acd_share(const std::string& text) {
  json j = open(text, "acd_share");
  acd::AcdShare s;
  s.index = get<std::size_t>(j, "index");
  s.positions = product_from(get<json>(j, "positions"));
  return s;
}

std::string dump_acd_key(const acd::AcdVerificationKey& vk) {
  json j = header("acd_key");
  json shares = json::array();
  for (const auto& k : vk.shares) {
    json checks = json::array();
    for (const auto& [pos, y] : k.checks) checks.push_back({pos, y});
    shares.push_back(json{{"data", k.data}, {"checks", checks}});
  }
  j["shares"] = shares;
  return j.dump();
}

acd::AcdVerificationKey load_acd_key(const std::string& text) {
  json j = open(text, "acd_key");
  acd::AcdVerificationKey vk;
  for (const auto& s : get<json>(j, "shares")) {
    acd::ShareKey k;
    k.data = get<std::vector<std::size_t>>(s, "data");
    for (const auto& c : get<json>(s, "checks")) {
      if (!c.is_array() || c.size() != 2) throw FormatError("check entries are [position, value] pairs");
      k.checks.emplace_back(c[0].get<std::size_t>(), c[1].get<gf::Value>());
    }
    vk.shares.push_back(std::move(k));
  }
  return vk;
}

std::string dump_nscd_share(const nscd::NscdShare& s) {
  json j = header("nscd_share");
  j["index"] = s.index;
  j["qshare"] = product_json(s.qshare);
  std::vector<std::string> slices;
  for (const auto& b : s.classical_slice) slices.push_back(to_hex(b));
  j["classical_slice"] = slices;
  return j.dump();
}

nscd::NscdShare load_nscd_share(const std::string& text) {
  json j = open(text, "nscd_share");
  nscd::NscdShare s;
  s.index = get<std::size_t>(j, "index");
  s.qshare = product_from(get<json>(j, "qshare"));
  for (const auto& h : get<std::vector<std::string>>(j, "classical_slice")) s.classical_slice.push_back(from_hex(h));
  return s;
}

std::string dump_nscd_public(const NscdPublic& pub) {
  json j = header("nscd_public");
  j["n"] = pub.structure.n();
  if (pub.structure.is_threshold()) {
    j["k"] = pub.structure.k();
  } else {
    j["minimal"] = pub.structure.minimal();
  }
  j["scheme"] = css::to_string(pub.scheme);
  j["kappa"] = pub.keys.kappa;
  json vks = json::array();
  for (const auto& vk : pub.keys.vk) vks.push_back(json{{"x", to_hex(bk::bits_to_bytes(vk.x))},
                                                         {"theta", to_hex(bk::bits_to_bytes(vk.theta))},
                                                         {"bits", vk.x.size()}});
  j["vk"] = vks;
  return j.dump();
}

NscdPublic load_nscd_public(const std::string& text) {
  json j = open(text, "nscd_public");
  NscdPublic pub;
  try {
    const auto n = get<std::size_t>(j, "n");
    pub.structure = j.contains("k") ? access::AccessStructure::threshold(get<std::size_t>(j, "k"), n)
                                    : access::AccessStructure::general(n, get<std::vector<access::PartySet>>(j, "minimal"));
    pub.scheme = css::scheme_tag_from_string(get<std::string>(j, "scheme"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  pub.keys.kappa = get<std::size_t>(j, "kappa");
  for (const auto& v : get<json>(j, "vk")) {
    const auto bits = get<std::size_t>(v, "bits");
    bk::VerificationKey vk;
    vk.x = bk::bytes_to_bits(from_hex(get<std::string>(v, "x")));
    vk.theta = bk::bytes_to_bits(from_hex(get<std::string>(v, "theta")));
    if (vk.x.size() < bits || vk.theta.size() < bits) throw FormatError("key shorter than its bit count");
    vk.x.resize(bits);
    vk.theta.resize(bits);
    pub.keys.vk.push_back(std::move(vk));
  }
  return pub;
}

std::string dump_certificate(const CertificateDoc& c) {
  json j = header("certificate");
  j.update(json{{"scheme", c.scheme}, {"index", c.index}, {"values", c.values}});
  return j.dump();
}

CertificateDoc load_certificate(const std::string& text) {
  json j = open(text, "certificate");
  CertificateDoc c{get<std::string>(j, "scheme"), get<std::size_t>(j, "index"),
                   get<std::vector<std::uint32_t>>(j, "values")};
  if (c.scheme != "acd" && c.scheme != "nscd") throw FormatError("certificate scheme must be acd or nscd");
  return c;
}

std::string dump_transcript(const game::Transcript& t) {
  json j = header("transcript");
  json events = json::array();
  for (const auto& e : t.events) {
    events.push_back(json{{"event", game::to_string(e.kind)}, {"share", e.share}, {"ok", e.ok}, {"detail", e.detail}});
  }
  std::vector<std::string> outputs;
  for (const auto& o : t.outputs) outputs.push_back(to_hex(o));
  j.update(json{{"events", events},       {"aborted", t.aborted}, {"abort_reason", t.abort_reason},
                {"corrupted", t.corrupted}, {"deleted", t.deleted}, {"outputs", outputs}});
  return j.dump();
}

game::Transcript load_transcript(const std::string& text) {
  json j = open(text, "transcript");
  game::Transcript t;
  for (const auto& e : get<json>(j, "events")) {
    try {
      t.events.push_back({game::event_kind_from_string(get<std::string>(e, "event")), get<std::size_t>(e, "share"),
                          get<bool>(e, "ok"), get<std::string>(e, "detail")});
    } catch (const std::invalid_argument& ex) {
      throw FormatError(ex.what());
    }
  }
  t.aborted = get<bool>(j, "aborted");
  t.abort_reason = get<std::string>(j, "abort_reason");
  t.corrupted = get<std::vector<std::size_t>>(j, "corrupted");
  t.deleted = get<std::vector<std::size_t>>(j, "deleted");
  for (const auto& h : get<std::vector<std::string>>(j, "outputs")) t.outputs.push_back(from_hex(h));
  return t;
}

std::string dump_config(const harness::ExperimentConfig& c) {
  json j = header("config");
  j.update(config_json(c));
  return j.dump(2);
}

harness::ExperimentConfig load_config(const std::string& text) {
  json j = open(text, "config");
  harness::ExperimentConfig c;
  try {
    c.scheme = j.value("scheme", c.scheme);
    c.n = j.value("n", c.n);
    c.k = j.value("k", c.k);
    if (j.contains("minimal")) c.minimal = j["minimal"].get<std::vector<access::PartySet>>();
    c.lambda = j.value("lambda", c.lambda);
    c.variant = acd::variant_from_string(j.value("variant", std::string(acd::to_string(c.variant))));
    c.t = j.value("t", c.t);
    c.r = j.value("r", c.r);
    c.ell = j.value("ell", c.ell);
    if (j.contains("field_degree")) c.field_degree = j["field_degree"].get<std::uint32_t>();
    if (j.contains("insecure_kappa")) c.insecure_kappa = j["insecure_kappa"].get<std::size_t>();
    if (j.contains("strategy")) c.strategy = strategy_from(j["strategy"]);
    c.trials = j.value("trials", c.trials);
    c.seed = j.value("seed", c.seed);
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return c;
}

std::string dump_report(const harness::ExperimentReport& r) {
  json j = header("report");
  j["config"] = config_json(r.config);
  json metrics = json::array();
  for (const auto& m : r.metrics) {
    metrics.push_back(json{{"name", m.name},
                           {"estimate", m.estimate},
                           {"trials", m.trials},
                           {"exact", optional_number(m.exact)},
                           {"bound", optional_number(m.bound)},
                           {"criterion", m.criterion},
                           {"pass", m.pass}});
  }
  j["metrics"] = metrics;
  j["pass"] = r.pass;
  return j.dump(2);
}

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int s = 0; s < 32; s += 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

std::uint32_t get_u32(const std::vector<std::uint8_t>& in, std::size_t& pos) {
  if (pos + 4 > in.size()) throw FormatError("truncated binary share at byte " + std::to_string(pos));
  std::uint32_t v = 0;
  for (int s = 0; s < 4; ++s) v |= std::uint32_t{in[pos++]} << (8 * s);
  return v;
}

}  // namespace

std::vector<std::uint8_t> encode_acd_share_binary(const acd::AcdShare& s) {
  std::vector<std::uint8_t> out{'S', 'S', 'C', 'D', static_cast<std::uint8_t>(kFormatVersion), 1};
  put_u32(out, s.positions.field().characteristic());
  put_u32(out, s.positions.field().degree());
  put_u32(out, static_cast<std::uint32_t>(s.index));
  put_u32(out, static_cast<std::uint32_t>(s.positions.size()));
  for (const auto& p : s.positions.positions()) {
    out.push_back(static_cast<std::uint8_t>(p.basis));
    put_u32(out, p.value);
  }
  return out;
}

acd::AcdShare decode_acd_share_binary(const std::vector<std::uint8_t>& in) {
  if (in.size() < 6 || in[0] != 'S' || in[1] != 'S' || in[2] != 'C' || in[3] != 'D') {
    throw FormatError("missing SSCD magic");
  }
  if (in[4] != kFormatVersion) throw FormatError("unsupported binary version " + std::to_string(in[4]));
  if (in[5] != 1) throw FormatError("binary payload is not an acd share");
  std::size_t pos = 6;
  const auto p = get_u32(in, pos);
  const auto k = get_u32(in, pos);
  const gf::Field* f;
  try {
    f = &gf::Field::get(p, k);
  } catch (const std::exception& e) {
    throw FormatError(std::string("bad field: ") + e.what());
  }
  acd::AcdShare s;
  s.index = get_u32(in, pos);
  const auto count = get_u32(in, pos);
  if (in.size() - pos != std::size_t{count} * 5) throw FormatError("binary share length does not match its count");
  std::vector<qsim::Position> positions;
  positions.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint8_t b = in[pos++];
    if (b > 1) throw FormatError("bad basis byte");
    const auto v = get_u32(in, pos);
    if (!f->contains(v)) throw FormatError("position value outside the field");
    positions.push_back({static_cast<qsim::Basis>(b), v});
  }
  s.positions = qsim::ProductShare(*f, std::move(positions));
  return s;
}

}  // namespace sscd::io
