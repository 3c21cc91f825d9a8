// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "aslab/addpoly.hpp"
#include "aslab/asext.hpp"
#include "aslab/contrary.hpp"
#include "aslab/hypercube.hpp"

namespace {

using namespace aslab;

void BM_FieldMul(benchmark::State& state) {
  const gf::FiniteField F(2, static_cast<std::uint32_t>(state.range(0)));
  std::uint32_t x = F.generator().index();
  const std::uint32_t y = F.element(F.order() - 1).index();
  for (auto _ : state) {
    x = F.mul(x, y);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(8)->Arg(16);

void BM_FieldInv(benchmark::State& state) {
  const gf::FiniteField F(2, static_cast<std::uint32_t>(state.range(0)));
  std::uint32_t x = F.generator().index();
  for (auto _ : state) {
    x = F.inv(x);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldInv)->Arg(4)->Arg(8)->Arg(16);

void BM_SubgroupPolynomial(benchmark::State& state) {
  const gf::FiniteField F(2, 12);
  std::vector<gf::Element> gens;
  for (std::int64_t i = 0; i < state.range(0); ++i) gens.push_back(F.generator().pow(static_cast<std::uint64_t>(i)));
  const auto G = addpoly::FpSubspace::from_generators(F, gens);
  for (auto _ : state) benchmark::DoNotOptimize(addpoly::f_of_subgroup(G));
}
BENCHMARK(BM_SubgroupPolynomial)->DenseRange(2, 8, 2);

struct ContraryInput {
  asext::ArtinSchreierExtension ext;
  std::vector<gf::Element> a;
};

ContraryInput contrary_input(std::uint32_t p, std::uint32_t k, std::size_t n) {
  const gf::FiniteField K(p, k);
  std::mt19937_64 rng(0);
  return {asext::build_as_extension(K), contrary::sample_independent_tuple(K, n, rng)};
}

void BM_GenerateContrary(benchmark::State& state) {
  const auto in = contrary_input(2, static_cast<std::uint32_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(contrary::generate_contrary(in.ext, in.a));
}
BENCHMARK(BM_GenerateContrary)->Arg(2)->Arg(4)->Arg(8);

void BM_VerifyCertificate(benchmark::State& state) {
  const auto in = contrary_input(2, static_cast<std::uint32_t>(state.range(0)), 2);
  const auto cert = contrary::generate_contrary(in.ext, in.a);
  for (auto _ : state) benchmark::DoNotOptimize(contrary::verify_certificate(cert));
}
BENCHMARK(BM_VerifyCertificate)->Arg(2)->Arg(4)->Arg(8);

void BM_VerifyPullback(benchmark::State& state) {
  const gf::FiniteField K(2, 3);
  const gf::Element g = K.generator();
  const auto cube = hypercube::build_bottom_up(K, std::vector{K.one(), g, g * g});
  const gf::FiniteField E(2, static_cast<std::uint32_t>(state.range(0)));
  const auto e = gf::build_embedding(K, E);
  for (auto _ : state) benchmark::DoNotOptimize(hypercube::verify_pullback(cube, e));
}
BENCHMARK(BM_VerifyPullback)->Arg(3)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
