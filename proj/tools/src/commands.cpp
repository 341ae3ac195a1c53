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

#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "sscd/acd.hpp"
#include "sscd/extractor.hpp"
#include "sscd/harness.hpp"
#include "sscd/nscd.hpp"
#include "sscd/serialize.hpp"
#include "structure_arg.hpp"

namespace sscd::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_text(const std::string& path) {
  auto b = read_bytes(path);
  return {b.begin(), b.end()};
}

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  write_bytes(path, {text.begin(), text.end()});
}

bool is_binary(const std::vector<std::uint8_t>& b) { return b.size() >= 4 && b[0] == 'S' && b[1] == 'S' && b[2] == 'C'; }

std::string to_hex(const std::vector<std::uint8_t>& b) {
  std::ostringstream s;
  for (auto c : b) s << "0123456789abcdef"[c >> 4] << "0123456789abcdef"[c & 15];
  return s.str();
}

std::vector<std::uint8_t> from_hex(std::string s) {
  if (s.rfind("0x", 0) == 0) s = s.substr(2);
  if (s.empty() || s.size() % 2) throw ConfigError("secret must be a non-empty even-length hex string");
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < s.size(); i += 2) {
    try {
      out.push_back(static_cast<std::uint8_t>(std::stoul(s.substr(i, 2), nullptr, 16)));
    } catch (const std::exception&) {
      throw ConfigError("bad hex digit in secret");
    }
  }
  return out;
}

acd::AcdParams params_from(const AcdParamArgs& a) {
  acd::Variant v;
  try {
    v = acd::variant_from_string(a.variant);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (v == acd::Variant::manual) {
    if (a.t == 0) throw ConfigError("manual parameters need --t, --r and --ell");
    const gf::Field* f = a.field_degree ? &gf::Field::get(2, a.field_degree) : nullptr;
    return acd::manual_params(a.n, a.k, a.t, a.r, a.ell, f);
  }
  return acd::derive_params(a.lambda, a.n, a.k, v);
}

std::vector<std::string> share_files(const std::string& dir, const std::vector<std::string>& explicit_files) {
  if (!explicit_files.empty()) return explicit_files;
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    const auto name = e.path().filename().string();
    if (name.rfind("share_", 0) == 0) out.push_back(e.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

acd::AcdShare load_acd_any(const std::string& path) {
  auto bytes = read_bytes(path);
  if (is_binary(bytes)) return io::decode_acd_share_binary(bytes);
  return io::load_acd_share({bytes.begin(), bytes.end()});
}

}  // namespace

int cmd_params(const AcdParamArgs& a) {
  const acd::AcdParams p = params_from(a);
  const auto v = acd::validate_params(p);
  std::cout << io::dump_acd_params(p) << "\n";
  if (!v.ok) {
    std::cerr << "invalid: " << v.diagnostic << "\n";
    return kExitPropertyFailure;
  }
  return kExitPass;
}

int cmd_split(const SplitArgs& a) {
  Rng rng(a.seed);
  fs::create_directories(a.out);
  const fs::path out(a.out);
  if (a.scheme == "acd") {
    const acd::AcdParams p = params_from(a.acd);
    if (auto v = acd::validate_params(p); !v.ok) throw ConfigError("invalid parameters: " + v.diagnostic);
    gf::Value secret;
    try {
      secret = static_cast<gf::Value>(std::stoul(a.secret.empty() ? "0" : a.secret, nullptr, 0));
    } catch (const std::exception&) {
      throw ConfigError("acd secret must be an integer field element");
    }
    if (!p.field->contains(secret)) throw ConfigError("secret is outside " + p.field->name());
    const auto d = acd::acd_split(p, secret, rng);
    write_text((out / "params.json").string(), io::dump_acd_params(p));
    write_text((out / "key.json").string(), io::dump_acd_key(d.vk));
    for (const auto& s : d.shares) {
      const std::string base = (out / ("share_" + std::to_string(s.index))).string();
      if (a.binary) {
        write_bytes(base + ".bin", io::encode_acd_share_binary(s));
      } else {
        write_text(base + ".json", io::dump_acd_share(s));
      }
    }
    std::cout << "wrote " << d.shares.size() << " acd shares to " << a.out << "\n";
    return kExitPass;
  }
  if (a.scheme == "nscd") {
    if (a.structure.empty()) throw ConfigError("nscd needs --structure");
    const auto st = parse_structure(a.structure);
    nscd::NscdOptions opts;
    opts.insecure_kappa = a.insecure_kappa;
    const auto d = nscd::nscd_split(st, a.lambda, from_hex(a.secret.empty() ? "00" : a.secret), rng, opts);
    write_text((out / "public.json").string(), io::dump_nscd_public({st, d.scheme, d.keys}));
    for (const auto& s : d.shares) {
      write_text((out / ("share_" + std::to_string(s.index) + ".json")).string(), io::dump_nscd_share(s));
    }
    std::cout << "wrote " << d.shares.size() << " nscd shares to " << a.out << "\n";
    return kExitPass;
  }
  throw ConfigError("--scheme must be acd or nscd");
}

int cmd_reconstruct(const ReconstructArgs& a) {
  Rng rng(a.seed);
  const fs::path dir(a.dir);
  const auto files = share_files(a.dir, a.shares);
  if (a.scheme == "acd") {
    const auto p = io::load_acd_params(read_text((dir / "params.json").string()));
    std::vector<acd::AcdShare> shares;
    for (const auto& f : files) shares.push_back(load_acd_any(f));
    const auto s = acd::acd_reconstruct(p, shares, rng);
    if (!s) {
      std::cout << "failure\n";
      return kExitPropertyFailure;
    }
    std::cout << *s << "\n";
    return kExitPass;
  }
  if (a.scheme == "nscd") {
    const auto pub = io::load_nscd_public(read_text((dir / "public.json").string()));
    std::vector<nscd::NscdShare> shares;
    for (const auto& f : files) shares.push_back(io::load_nscd_share(read_text(f)));
    const auto s = nscd::nscd_reconstruct(pub.structure, pub.scheme, shares, rng);
    if (!s) {
      std::cout << "failure\n";
      return kExitPropertyFailure;
    }
    std::cout << to_hex(*s) << "\n";
    return kExitPass;
  }
  throw ConfigError("--scheme must be acd or nscd");
}

int cmd_delete(const DeleteArgs& a) {
  Rng rng(a.seed);
  auto bytes = read_bytes(a.share);
  io::CertificateDoc cert;
  if (is_binary(bytes) || io::document_type({bytes.begin(), bytes.end()}) == "acd_share") {
    const bool bin = is_binary(bytes);
    acd::AcdShare s = load_acd_any(a.share);
    cert = {"acd", s.index, acd::acd_delete(s, rng)};
    // the share file now holds the measured (destroyed) state
    if (bin) {
      write_bytes(a.share, io::encode_acd_share_binary(s));
    } else {
      write_text(a.share, io::dump_acd_share(s));
    }
  } else {
    nscd::NscdShare s = io::load_nscd_share({bytes.begin(), bytes.end()});
    const auto bits = nscd::nscd_delete(s, rng);
    cert = {"nscd", s.index, {bits.begin(), bits.end()}};
    write_text(a.share, io::dump_nscd_share(s));
  }
  write_text(a.out, io::dump_certificate(cert));
  return kExitPass;
}

int cmd_verify(const VerifyArgs& a) {
  const std::string key = read_text(a.key);
  const auto cert = io::load_certificate(read_text(a.cert));
  bool ok;
  const std::string type = io::document_type(key);
  try {
    if (type == "acd_key") {
      if (cert.scheme != "acd") throw ConfigError("certificate is not an acd certificate");
      ok = acd::acd_verify(io::load_acd_key(key), cert.index, cert.values);
    } else if (type == "nscd_public") {
      if (cert.scheme != "nscd") throw ConfigError("certificate is not an nscd certificate");
      nscd::Certificate bits;
      for (auto v : cert.values) {
        if (v > 1) throw ConfigError("nscd certificate values must be bits");
        bits.push_back(static_cast<std::uint8_t>(v));
      }
      ok = nscd::nscd_verify(io::load_nscd_public(key).keys, cert.index, bits);
    } else {
      throw ConfigError("key file has type " + type);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::out_of_range& e) {
    throw ConfigError(e.what());
  }
  std::cout << (ok ? "accept" : "reject") << "\n";
  return ok ? kExitPass : kExitPropertyFailure;
}

int cmd_extractor_check(const ExtractorArgs& a) {
  const gf::Field& f = gf::Field::parse(a.field);
  gf::FieldMatrix R(f, a.m, a.M);
  if (a.matrix == "xor") {
    for (std::size_t i = 0; i < a.m; ++i)
      for (std::size_t j = 0; j < a.M; ++j) R.at(i, j) = 1;
  } else if (a.matrix == "rs") {
    // Vandermonde columns at distinct points, plus the point at infinity
    // when M = q + 1.
    if (a.M > f.order() + 1) throw ConfigError("rs matrix needs M <= q + 1");
    for (std::size_t j = 0; j < a.M; ++j) {
      if (j == f.order()) {
        R.at(a.m - 1, j) = 1;
        continue;
      }
      const gf::Value x = static_cast<gf::Value>(j);
      for (std::size_t i = 0; i < a.m; ++i) R.at(i, j) = f.pow(x, i);
    }
  } else if (a.matrix == "file") {
    json j = json::parse(read_text(a.matrix_file), nullptr, false);
    if (j.is_discarded() || !j.contains("entries")) throw ConfigError("matrix file needs {\"entries\": [...]}");
    auto e = j["entries"].get<std::vector<gf::Value>>();
    if (e.size() != a.m * a.M) throw ConfigError("matrix file has the wrong number of entries");
    R = gf::FieldMatrix(f, a.m, a.M, e);
  } else {
    throw ConfigError("--matrix must be xor, rs or file");
  }
  auto inst = extractor::ExtractorInstance::make(R);
  if (auto why = extractor::check_instance(inst); !why.empty()) throw ConfigError("instance rejected: " + why);
  Rng rng(a.seed);
  const double d = extractor::verify_theorem(inst, a.trials, rng);
  const bool pass = d <= 1e-9;
  json rep{{"format", "sscd"},
           {"version", io::kFormatVersion},
           {"type", "extractor_report"},
           {"instance", {{"field", f.name()}, {"M", a.M}, {"m", a.m}, {"matrix", a.matrix}, {"R", R.entries()}}},
           {"trials", a.trials},
           {"seed", a.seed},
           {"max_distance", d},
           {"pass", pass}};
  write_text(a.out, rep.dump(2));
  return pass ? kExitPass : kExitPropertyFailure;
}

namespace {

harness::ExperimentConfig load_game_config(const GameArgs& a) {
  harness::ExperimentConfig c = io::load_config(read_text(a.config));
  if (a.seed) c.seed = *a.seed;
  if (a.trials) c.trials = *a.trials;
  return c;
}

}  // namespace

int cmd_run_game(const GameArgs& a) {
  const auto c = load_game_config(a);
  Rng rng = trial_rng(c.seed, 0);
  game::Transcript t;
  try {
    if (c.scheme == "acd") {
      const acd::AcdParams p =
          c.variant == acd::Variant::manual
              ? acd::manual_params(c.n, c.k, c.t, c.r, c.ell, c.field_degree ? &gf::Field::get(2, *c.field_degree) : nullptr)
              : acd::derive_params(c.lambda, c.n, c.k, c.variant);
      auto adv = harness::make_acd_adversary(c.strategy, p);
      t = acd::run_acd_game(p, *adv, static_cast<gf::Value>(uniform_below(rng, p.field->order())), rng);
    } else if (c.scheme == "nscd") {
      const auto st = c.minimal.empty() ? access::AccessStructure::threshold(c.k, c.n)
                                        : access::AccessStructure::general(c.n, c.minimal);
      nscd::NscdOptions opts;
      opts.insecure_kappa = c.insecure_kappa;
      auto adv = harness::make_nscd_adversary(c.strategy, st, css::default_scheme(st));
      t = harness::run_nscd_adaptive_game(st, c.lambda, {static_cast<std::uint8_t>(rng())}, *adv, rng, opts);
    } else {
      throw ConfigError("scheme must be acd or nscd");
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  write_text(a.out, io::dump_transcript(t));
  return kExitPass;
}

int cmd_report(const GameArgs& a) {
  harness::ExperimentReport r;
  try {
    r = harness::run_experiment(load_game_config(a));
  } catch (const harness::ConfigError& e) {
    throw ConfigError(e.what());
  }
  write_text(a.out, io::dump_report(r));
  return r.pass ? kExitPass : kExitPropertyFailure;
}

}  // namespace sscd::cli
