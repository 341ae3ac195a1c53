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
#include "sscd/nscd.hpp"

namespace sscd::nscd {
namespace {

using access::AccessStructure;
using access::PartySet;

NscdOptions small_kappa() {
  NscdOptions o;
  o.insecure_kappa = 4;
  return o;
}

TEST(NscdTest, KappaIsSquaredMax) {
  EXPECT_EQ(kappa_for(8, 3), 64u);
  EXPECT_EQ(kappa_for(2, 5), 25u);
}

TEST(NscdTest, Shape) {
  Rng rng(1);
  auto a = AccessStructure::threshold(2, 3);
  auto d = nscd_split(a, 2, {0x5a}, rng, small_kappa());
  ASSERT_EQ(d.shares.size(), 3u);
  for (const auto& s : d.shares) EXPECT_EQ(s.classical_slice.size(), 3u);
  EXPECT_EQ(d.keys.kappa, 4u);
  EXPECT_EQ(d.keys.vk.size(), 3u);
}

TEST(NscdTest, RoundTripAcrossStructures) {
  Rng rng(2);
  std::vector<AccessStructure> grid{AccessStructure::threshold(2, 2), AccessStructure::threshold(2, 3),
                                    AccessStructure::threshold(3, 3), AccessStructure::general(3, {{1, 2}, {3}})};
  for (const auto& a : grid) {
    for (int trial = 0; trial < 200; ++trial) {
      Bytes secret{static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng())};
      auto d = nscd_split(a, 2, secret, rng, small_kappa());
      auto got = nscd_reconstruct(a, d.scheme, d.shares, rng);
      ASSERT_TRUE(got.has_value()) << a.describe();
      ASSERT_EQ(*got, secret) << a.describe();
    }
  }
}

TEST(NscdTest, MinimalSetsReconstructAndUnauthorizedFail) {
  Rng rng(3);
  auto a = AccessStructure::general(3, {{1, 2}, {3}});
  const Bytes secret{0x42};
  for (const auto& set : a.minimal()) {
    auto d = nscd_split(a, 2, secret, rng, small_kappa());
    std::vector<NscdShare> sub;
    for (auto i : set) sub.push_back(d.shares[i - 1]);
    EXPECT_EQ(nscd_reconstruct(a, d.scheme, sub, rng), secret);
  }
  auto d = nscd_split(a, 2, secret, rng, small_kappa());
  EXPECT_FALSE(nscd_reconstruct(a, d.scheme, {d.shares[0]}, rng).has_value());
}

TEST(NscdTest, DeleteVerifyAndTamper) {
  Rng rng(4);
  auto a = AccessStructure::threshold(2, 3);
  for (int trial = 0; trial < 50; ++trial) {
    auto d = nscd_split(a, 2, {0x11}, rng, small_kappa());
    for (std::size_t i = 1; i <= 3; ++i) {
      auto cert = nscd_delete(d.shares[i - 1], rng);
      ASSERT_TRUE(nscd_verify(d.keys, i, cert));
      const auto& theta = d.keys.vk[i - 1].theta;
      for (std::size_t j = 0; j < theta.size(); ++j) {
        if (theta[j]) {
          cert[j] ^= 1;
          EXPECT_FALSE(nscd_verify(d.keys, i, cert));
          break;
        }
      }
    }
  }
  auto d = nscd_split(a, 2, {0x11}, rng, small_kappa());
  EXPECT_THROW(nscd_verify(d.keys, 4, {}), std::out_of_range);
}

TEST(NscdTest, RandomCertificateAcceptanceByEnumeration) {
  Rng rng(5);
  auto a = AccessStructure::threshold(2, 2);
  NscdOptions o;
  o.insecure_kappa = 2;  // 8 classical bits per share -> 16 certificate bits
  auto d = nscd_split(a, 2, {0x01}, rng, o);
  const auto& vk = d.keys.vk[0];
  const std::size_t len = vk.theta.size();
  ASSERT_LE(len, 16u);
  std::size_t checks = 0;
  for (auto b : vk.theta) checks += b;
  std::size_t accepted = 0;
  for (std::uint32_t c = 0; c < (1u << len); ++c) {
    Certificate cert(len);
    for (std::size_t j = 0; j < len; ++j) cert[j] = static_cast<std::uint8_t>((c >> j) & 1);
    accepted += nscd_verify(d.keys, 1, cert);
  }
  EXPECT_EQ(accepted << checks, std::size_t{1} << len);
}

TEST(NscdGameTest, AllHonestDeleteReturnsOutput) {
  Rng rng(6);
  auto a = AccessStructure::threshold(2, 3);
  std::vector<PartySet> p{{1}, {2}, {3}};
  auto t = run_nscd_game(a, p, {honest_block_deleter(), honest_block_deleter(), honest_block_deleter()}, {7}, 2,
                         rng, small_kappa());
  EXPECT_FALSE(t.aborted);
  EXPECT_EQ(t.outputs.size(), 3u);
}

TEST(NscdGameTest, NoDeletionsAborts) {
  Rng rng(7);
  auto a = AccessStructure::threshold(2, 2);
  auto t = run_nscd_game(a, {{1}, {2}}, {keep_everything(), keep_everything()}, {7}, 2, rng, small_kappa());
  EXPECT_TRUE(t.aborted);
  EXPECT_TRUE(t.outputs.empty());
}

TEST(NscdGameTest, OnlyShareOneDeletedAborts) {
  Rng rng(8);
  auto a = AccessStructure::threshold(2, 3);
  auto t = run_nscd_game(a, {{1}, {2}, {3}}, {honest_block_deleter(), keep_everything(), keep_everything()}, {7},
                         2, rng, small_kappa());
  EXPECT_TRUE(t.aborted);
  auto t2 = run_nscd_game(a, {{1}, {2}, {3}}, {honest_block_deleter(), honest_block_deleter(), keep_everything()},
                          {7}, 2, rng, small_kappa());
  EXPECT_FALSE(t2.aborted);
}

TEST(NscdGameTest, InadmissiblePartitionRejected) {
  Rng rng(9);
  auto a = AccessStructure::threshold(2, 3);
  EXPECT_THROW(run_nscd_game(a, {{1, 2}, {3}}, {keep_everything(), keep_everything()}, {7}, 2, rng, small_kappa()),
               std::invalid_argument);
}

TEST(NscdTest, HonestViewIndependentOfSecret) {
  for (std::size_t kappa = 1; kappa <= 6; ++kappa) {
    EXPECT_NEAR(honest_view_distance_two_of_two(kappa), 0.0, 1e-12) << kappa;
  }
}

}  // namespace
}  // namespace sscd::nscd
