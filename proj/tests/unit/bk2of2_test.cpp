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

#include <cmath>

#include "gtest/gtest.h"
#include "sscd/bk2of2.hpp"

namespace sscd::bk {
namespace {

TEST(BkTest, ForcedSplitMasksWithDataBit) {
  // x = 10, theta = 01: the only data position is the first, holding 1.
  for (std::uint8_t s : {0, 1}) {
    Share sh = bk_split_with({1, 0}, {0, 1}, {s});
    ASSERT_EQ(sh.cshare.masked.size(), 1u);
    EXPECT_EQ(sh.cshare.masked[0], s ^ 1);
    EXPECT_EQ(sh.qshare[0].basis, qsim::Basis::computational);
    EXPECT_EQ(sh.qshare[1].basis, qsim::Basis::fourier);
  }
}

TEST(BkTest, AllOnesThetaRejected) {
  EXPECT_THROW(bk_split_with({1, 0}, {1, 1}, {0}), std::invalid_argument);
}

TEST(BkTest, RoundTrip) {
  Rng rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t lambda = 1 + trial % 8;
    Bits secret(1 + trial % 5);
    for (auto& b : secret) b = static_cast<std::uint8_t>(rng() & 1);
    Share sh = bk_split(lambda, secret, rng);
    for (std::size_t b = 0; b < secret.size(); ++b) {
      bool all_ones = true;
      for (std::size_t j = 0; j < lambda; ++j) all_ones &= sh.cshare.theta[b * lambda + j] == 1;
      ASSERT_FALSE(all_ones);
    }
    ASSERT_EQ(bk_reconstruct(sh.qshare, sh.cshare, rng), secret);
  }
}

TEST(BkTest, HonestDeletionVerifies) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    Share sh = bk_split(6, {1, 0, 1}, rng);
    auto cert = bk_delete(sh.qshare, rng);
    EXPECT_TRUE(bk_verify(sh.vk, cert));
  }
}

TEST(BkTest, VerifyRejectsWrongLength) {
  Share sh = bk_split_with({1, 0}, {0, 1}, {0});
  EXPECT_THROW(bk_verify(sh.vk, {0}), std::invalid_argument);
}

TEST(BkTest, RandomCertificateAcceptance) {
  Rng rng(13);
  Share sh = bk_split(4, {1}, rng);
  std::size_t checks = 0;
  for (auto b : sh.vk.theta) checks += b;
  std::size_t accepted = 0;
  for (std::uint32_t c = 0; c < 16; ++c) {
    Bits cert{static_cast<std::uint8_t>(c & 1), static_cast<std::uint8_t>((c >> 1) & 1),
              static_cast<std::uint8_t>((c >> 2) & 1), static_cast<std::uint8_t>((c >> 3) & 1)};
    accepted += bk_verify(sh.vk, cert);
  }
  EXPECT_DOUBLE_EQ(accepted / 16.0, std::pow(2.0, -static_cast<double>(checks)));
}

TEST(BkTest, DeletedShareReconstructsAtChance) {
  Rng rng(14);
  for (std::uint8_t s : {0, 1}) {
    Share sh = bk_split(5, {s}, rng);
    EXPECT_NEAR(reconstruct_probability(sh.qshare, sh.cshare, s), 1.0, 1e-12);
    bk_delete(sh.qshare, rng);
    EXPECT_NEAR(reconstruct_probability(sh.qshare, sh.cshare, s), 0.5, 1e-12);
  }
}

TEST(BkTest, HonestViewIndependentOfSecret) {
  for (std::size_t lambda : {2, 4, 6}) EXPECT_NEAR(honest_delete_view_distance(lambda), 0.0, 1e-12);
}

TEST(BkTest, SkipOneDenseMatchesClosedForm) {
  for (std::size_t lambda = 2; lambda <= 6; ++lambda) {
    auto dense = skip_one_dense(lambda);
    auto closed = skip_one_closed_form(lambda);
    EXPECT_NEAR(dense.acceptance, closed.acceptance, 1e-9) << lambda;
    EXPECT_NEAR(dense.advantage, closed.advantage, 1e-9) << lambda;
    EXPECT_NEAR(closed.advantage, 1.0 / (std::pow(2.0, lambda) - 1), 1e-12);
  }
}

TEST(BkTest, ClassicalEncodingRoundTrip) {
  Rng rng(15);
  Share sh = bk_split(3, {1, 1, 0, 1, 0}, rng);
  EXPECT_EQ(decode_classical(encode_classical(sh.cshare)), sh.cshare);
  EXPECT_THROW(decode_classical({1, 2}), std::invalid_argument);
  EXPECT_EQ(bits_to_bytes(bytes_to_bits({0x5a, 0x01})), (Bytes{0x5a, 0x01}));
}

}  // namespace
}  // namespace sscd::bk
