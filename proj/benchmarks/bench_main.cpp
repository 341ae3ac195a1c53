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

#include <numeric>
#include <vector>

#include <benchmark/benchmark.h>

#include "sscd/acd.hpp"
#include "sscd/extractor.hpp"
#include "sscd/gf.hpp"
#include "sscd/nscd.hpp"

using namespace sscd;

static void BM_FieldMul(benchmark::State& state) {
  const auto& f = gf::Field::get(2, static_cast<std::uint32_t>(state.range(0)));
  Rng rng(1);
  std::vector<gf::Value> a(1024), b(1024);
  for (auto& v : a) v = static_cast<gf::Value>(uniform_below(rng, f.order()));
  for (auto& v : b) v = static_cast<gf::Value>(uniform_below(rng, f.order()));
  for (auto _ : state) {
    gf::Value acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc ^= f.mul(a[i], b[i]);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(13)->Arg(16);

static void BM_PolyEvalMany(benchmark::State& state) {
  const auto& f = gf::Field::get(2, 13);
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  std::vector<gf::Value> c(n / 2), xs(n);
  for (auto& v : c) v = static_cast<gf::Value>(uniform_below(rng, f.order()));
  std::iota(xs.begin(), xs.end(), gf::Value{1});
  const gf::Polynomial poly(f, c);
  for (auto _ : state) benchmark::DoNotOptimize(poly.eval_many(xs));
}
BENCHMARK(BM_PolyEvalMany)->Arg(512)->Arg(2048)->Unit(benchmark::kMicrosecond);

// Decoding s points of a degree s/2 codeword with a quarter of them wrong.
static void BM_ReedSolomonDecode(benchmark::State& state) {
  const auto& f = gf::Field::get(2, 13);
  const auto s = static_cast<std::size_t>(state.range(0));
  const std::size_t deg = s / 2;
  Rng rng(3);
  std::vector<gf::Value> c(deg + 1), xs(s);
  for (auto& v : c) v = static_cast<gf::Value>(uniform_below(rng, f.order()));
  std::iota(xs.begin(), xs.end(), gf::Value{1});
  const gf::Polynomial poly(f, c);
  auto ys = poly.eval_many(xs);
  for (std::size_t i = 0; i < s / 4 - 1; ++i) ys[i] ^= 1;
  const gf::ReedSolomonDecoder dec(f, deg, xs);
  for (auto _ : state) benchmark::DoNotOptimize(dec.decode(ys));
}
BENCHMARK(BM_ReedSolomonDecode)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

static void BM_AcdSplit(benchmark::State& state) {
  const auto p = acd::derive_params(static_cast<std::size_t>(state.range(0)), 3, 2, acd::Variant::tight);
  Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(acd::acd_split(p, 7, rng));
}
BENCHMARK(BM_AcdSplit)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_AcdReconstruct(benchmark::State& state) {
  const auto p = acd::derive_params(static_cast<std::size_t>(state.range(0)), 3, 2, acd::Variant::tight);
  Rng rng(5);
  const auto d = acd::acd_split(p, 7, rng);
  acd::Reconstructor rec(p);
  rec({d.shares[0], d.shares[1]}, rng);  // builds the cached decoder
  for (auto _ : state) benchmark::DoNotOptimize(rec({d.shares[0], d.shares[1]}, rng));
}
BENCHMARK(BM_AcdReconstruct)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_NscdSplit(benchmark::State& state) {
  const auto a = access::AccessStructure::threshold(2, 3);
  Rng rng(6);
  const std::size_t lambda = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nscd::nscd_split(a, lambda, {1, 2, 3, 4}, rng));
}
BENCHMARK(BM_NscdSplit)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_ExtractorInstance(benchmark::State& state) {
  const auto grid = extractor::theorem_grid();
  const auto& e = grid.at(static_cast<std::size_t>(state.range(0)));
  Rng rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(extractor::verify_theorem(e.instance, 1, rng, e.route));
  state.SetLabel(e.name);
}
BENCHMARK(BM_ExtractorInstance)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
