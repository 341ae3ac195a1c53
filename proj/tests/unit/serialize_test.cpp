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

#include "gtest/gtest.h"
#include "sscd/serialize.hpp"

namespace sscd::io {
namespace {

TEST(SerializeTest, AcdShareAtDerivedParams) {
  Rng rng(1);
  auto p = acd::derive_params(16, 3, 2, acd::Variant::tight);
  auto d = acd::acd_split(p, 77, rng);
  const std::string text = dump_acd_share(d.shares[0]);
  EXPECT_EQ(load_acd_share(text), d.shares[0]);
  EXPECT_EQ(dump_acd_share(load_acd_share(text)), text);
  const auto bin = encode_acd_share_binary(d.shares[1]);
  EXPECT_EQ(decode_acd_share_binary(bin), d.shares[1]);
  EXPECT_EQ(encode_acd_share_binary(decode_acd_share_binary(bin)), bin);
  EXPECT_EQ(load_acd_params(dump_acd_params(p)), p);
}

TEST(SerializeTest, TamperedKeyLoadsButFailsVerify) {
  Rng rng(2);
  auto p = acd::manual_params(3, 2, 12, 2, 1);
  auto d = acd::acd_split(p, 5, rng);
  auto cert = acd::acd_delete(d.shares[0], rng);
  auto vk = d.vk;
  vk.shares[0].checks[0].second ^= 1;
  auto loaded = load_acd_key(dump_acd_key(vk));
  EXPECT_EQ(loaded, vk);
  EXPECT_TRUE(acd::acd_verify(load_acd_key(dump_acd_key(d.vk)), 1, cert));
  EXPECT_FALSE(acd::acd_verify(loaded, 1, cert));
}

TEST(SerializeTest, NscdShareAndKeys) {
  Rng rng(3);
  auto a = access::AccessStructure::threshold(2, 3);
  nscd::NscdOptions o;
  o.insecure_kappa = 5;
  auto d = nscd::nscd_split(a, 2, {1, 2, 3}, rng, o);
  for (const auto& s : d.shares) EXPECT_EQ(load_nscd_share(dump_nscd_share(s)), s);
  auto pub = load_nscd_public(dump_nscd_public({a, d.scheme, d.keys}));
  EXPECT_EQ(pub.keys, d.keys);
  EXPECT_EQ(pub.scheme, d.scheme);
  EXPECT_TRUE(pub.structure.is_authorized(access::PartySet{1, 3}));
  EXPECT_FALSE(pub.structure.is_authorized(access::PartySet{2}));
}

TEST(SerializeTest, CertificateTranscriptConfig) {
  CertificateDoc c{"acd", 2, {1, 2, 3}};
  EXPECT_EQ(load_certificate(dump_certificate(c)), c);

  game::Transcript t;
  t.events = {{game::EventKind::corrupt, 1, true, ""}, {game::EventKind::abort, 0, false, "why"}};
  t.aborted = true;
  t.abort_reason = "why";
  t.corrupted = {1};
  t.outputs = {{0xab}};
  EXPECT_EQ(load_transcript(dump_transcript(t)), t);

  harness::ExperimentConfig cfg;
  cfg.scheme = "nscd";
  cfg.minimal = {{1, 2}, {3}};
  cfg.insecure_kappa = 4;
  cfg.strategy = {harness::StrategyKind::scripted, 0, {{harness::ScriptStep::Op::corrupt, 1}}};
  EXPECT_EQ(load_config(dump_config(cfg)), cfg);
}

TEST(SerializeTest, Diagnostics) {
  EXPECT_THROW(load_acd_share("{"), FormatError);
  EXPECT_THROW(load_acd_share(R"({"format":"sscd","version":2,"type":"acd_share"})"), FormatError);
  EXPECT_THROW(load_acd_share(R"({"format":"sscd","version":1,"type":"acd_key"})"), FormatError);
  try {
    load_acd_share(R"({"format":"sscd","version":1,"type":"acd_share","index":1})");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("positions"), std::string::npos);
  }
  EXPECT_THROW(decode_acd_share_binary({'S', 'S', 'C', 'X'}), FormatError);
  Rng rng(4);
  auto d = acd::acd_split(acd::manual_params(3, 2, 12, 2, 1), 1, rng);
  auto bin = encode_acd_share_binary(d.shares[0]);
  bin.pop_back();
  EXPECT_THROW(decode_acd_share_binary(bin), FormatError);
  EXPECT_EQ(document_type(dump_acd_share(d.shares[0])), "acd_share");
}

}  // namespace
}  // namespace sscd::io
