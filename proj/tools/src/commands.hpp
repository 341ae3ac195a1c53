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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sscd::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitConfigError = 2;

/// Thrown for bad flags, unreadable files and invalid parameters.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AcdParamArgs {
  std::size_t lambda = 16;
  std::size_t n = 3;
  std::size_t k = 2;
  std::string variant = "loose";
  std::size_t t = 0, r = 0, ell = 0;
  std::uint32_t field_degree = 0;  // 0 = minimal
};

struct SplitArgs {
  std::string scheme = "acd";
  std::string structure;  // nscd
  AcdParamArgs acd;
  std::size_t lambda = 16;
  std::optional<std::size_t> insecure_kappa;
  std::string secret;
  std::uint64_t seed = 1;
  std::string out = ".";
  bool binary = false;
};

struct ReconstructArgs {
  std::string scheme = "acd";
  std::string dir = ".";
  std::vector<std::string> shares;
  std::uint64_t seed = 1;
};

struct DeleteArgs {
  std::string scheme = "acd";
  std::string share;
  std::string out;
  std::uint64_t seed = 1;
};

struct VerifyArgs {
  std::string key;
  std::string cert;
};

struct ExtractorArgs {
  std::string field = "2^1";
  std::size_t M = 3;
  std::size_t m = 1;
  std::string matrix = "xor";
  std::string matrix_file;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::string out;
};

struct GameArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::string out;
};

int cmd_params(const AcdParamArgs& a);
int cmd_split(const SplitArgs& a);
int cmd_reconstruct(const ReconstructArgs& a);
int cmd_delete(const DeleteArgs& a);
int cmd_verify(const VerifyArgs& a);
int cmd_extractor_check(const ExtractorArgs& a);
int cmd_run_game(const GameArgs& a);
int cmd_report(const GameArgs& a);

}  // namespace sscd::cli
