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

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "sscd/serialize.hpp"

using namespace sscd::cli;

namespace {

void add_acd_params(CLI::App* cmd, AcdParamArgs& a) {
  cmd->add_option("--lambda", a.lambda, "security parameter");
  cmd->add_option("--n", a.n, "number of parties");
  cmd->add_option("--k", a.k, "threshold");
  cmd->add_option("--variant", a.variant, "loose | tight | manual")
      ->check(CLI::IsMember({"loose", "tight", "manual"}));
  cmd->add_option("--t", a.t, "positions per share (manual)");
  cmd->add_option("--r", a.r, "check positions per share (manual)");
  cmd->add_option("--ell", a.ell, "retained-information bound (manual)");
  cmd->add_option("--field-degree", a.field_degree, "use GF(2^d) instead of the minimal field (manual)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secret sharing with certified deletion: simulation and experiment tool"};
  app.require_subcommand(1);

  AcdParamArgs params;
  auto* c_params = app.add_subcommand("params", "derive and validate acd parameters");
  add_acd_params(c_params, params);

  SplitArgs split;
  auto* c_split = app.add_subcommand("split", "split a secret into share files");
  c_split->add_option("--scheme", split.scheme)->check(CLI::IsMember({"acd", "nscd"}));
  c_split->add_option("--structure", split.structure, "nscd access structure, e.g. 2of3 or {1,2},{3}");
  add_acd_params(c_split, split.acd);
  c_split->add_option("--insecure-kappa", split.insecure_kappa, "nscd inner parameter override (insecure)");
  c_split->add_option("--secret", split.secret, "acd: field element; nscd: hex bytes");
  c_split->add_option("--seed", split.seed);
  c_split->add_option("--out", split.out, "output directory");
  c_split->add_flag("--binary", split.binary, "compact binary acd shares");
  c_split->callback([&] { split.lambda = split.acd.lambda; });

  ReconstructArgs recon;
  auto* c_recon = app.add_subcommand("reconstruct", "reconstruct from share files");
  c_recon->add_option("--scheme", recon.scheme)->check(CLI::IsMember({"acd", "nscd"}));
  c_recon->add_option("--dir", recon.dir, "directory with params.json or public.json");
  c_recon->add_option("--shares", recon.shares, "share files (default: every share_* in --dir)");
  c_recon->add_option("--seed", recon.seed);

  DeleteArgs del;
  auto* c_del = app.add_subcommand("delete", "measure a share and write a certificate");
  c_del->add_option("--share", del.share)->required();
  c_del->add_option("--out", del.out, "certificate file (default stdout)");
  c_del->add_option("--seed", del.seed);

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "check a certificate against a key file");
  c_ver->add_option("--key", ver.key)->required();
  c_ver->add_option("--cert", ver.cert)->required();

  ExtractorArgs ext;
  auto* c_ext = app.add_subcommand("extractor-check", "numerically check the extractor on one instance");
  c_ext->add_option("--field", ext.field, "p^k");
  c_ext->add_option("--M", ext.M);
  c_ext->add_option("--m", ext.m);
  c_ext->add_option("--matrix", ext.matrix)->check(CLI::IsMember({"xor", "rs", "file"}));
  c_ext->add_option("--matrix-file", ext.matrix_file);
  c_ext->add_option("--trials", ext.trials);
  c_ext->add_option("--seed", ext.seed);
  c_ext->add_option("--out", ext.out);

  GameArgs game_args;
  auto* c_game = app.add_subcommand("run-game", "run one game from a config and print its transcript");
  auto* c_report = app.add_subcommand("report", "run an experiment from a config and print the report");
  for (auto* c : {c_game, c_report}) {
    c->add_option("--config", game_args.config)->required();
    c->add_option("--seed", game_args.seed);
    c->add_option("--trials", game_args.trials);
    c->add_option("--out", game_args.out);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    if (*c_params) return cmd_params(params);
    if (*c_split) return cmd_split(split);
    if (*c_recon) return cmd_reconstruct(recon);
    if (*c_del) return cmd_delete(del);
    if (*c_ver) return cmd_verify(ver);
    if (*c_ext) return cmd_extractor_check(ext);
    if (*c_game) return cmd_run_game(game_args);
    if (*c_report) return cmd_report(game_args);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const sscd::io::FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::logic_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
