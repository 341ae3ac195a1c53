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

// Versioned, self-describing documents for parameters, shares, keys,
// certificates, transcripts, configs and reports. Every JSON document
// carries {"format": "sscd", "version": 1, "type": ...}. Shares at derived
// parameters also have a compact binary form.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sscd/acd.hpp"
#include "sscd/game.hpp"
#include "sscd/harness.hpp"
#include "sscd/nscd.hpp"

namespace sscd::io {

inline constexpr int kFormatVersion = 1;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The "type" of a document, after checking format and version.
std::string document_type(const std::string& json);

std::string dump_acd_params(const acd::AcdParams& p);
acd::AcdParams load_acd_params(const std::string& json);

std::string dump_acd_share(const acd::AcdShare& s);
acd::AcdShare load_acd_share(const std::string& json);

std::string dump_acd_key(const acd::AcdVerificationKey& vk);
acd::AcdVerificationKey load_acd_key(const std::string& json);

std::string dump_nscd_share(const nscd::NscdShare& s);
nscd::NscdShare load_nscd_share(const std::string& json);

/// Keys together with the structure and classical scheme needed later.
struct NscdPublic {
  access::AccessStructure structure = access::AccessStructure::threshold(1, 1);
  css::SchemeTag scheme = css::SchemeTag::shamir;
  nscd::NscdKeys keys;
};
std::string dump_nscd_public(const NscdPublic& pub);
NscdPublic load_nscd_public(const std::string& json);

/// scheme is "acd" or "nscd"; values are field elements or bits.
struct CertificateDoc {
  std::string scheme;
  std::size_t index = 0;
  std::vector<std::uint32_t> values;
  friend bool operator==(const CertificateDoc&, const CertificateDoc&) = default;
};
std::string dump_certificate(const CertificateDoc& c);
CertificateDoc load_certificate(const std::string& json);

std::string dump_transcript(const game::Transcript& t);
game::Transcript load_transcript(const std::string& json);

std::string dump_config(const harness::ExperimentConfig& c);
/// Missing fields take their defaults; unknown strategy names and
/// malformed values raise FormatError.
harness::ExperimentConfig load_config(const std::string& json);

std::string dump_report(const harness::ExperimentReport& r);

/// "SSCD" magic, version byte, kind byte (1 = acd share), field p and k,
/// index, count, then per position a basis byte and a 32-bit value, all
/// little-endian.
std::vector<std::uint8_t> encode_acd_share_binary(const acd::AcdShare& s);
acd::AcdShare decode_acd_share_binary(const std::vector<std::uint8_t>& bytes);

}  // namespace sscd::io
