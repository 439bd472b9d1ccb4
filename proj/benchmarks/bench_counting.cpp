/*
 * Copyright 2026 The monocount Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <random>

#include "monocount/monocount.hpp"

namespace {

using namespace monocount;

MonomialForm diagonal(std::uint32_t p, std::size_t s, std::int64_t m) {
  const auto f = build_field(p);
  IntMatrix exps(s, s);
  for (std::size_t i = 0; i < s; ++i) exps(i, i) = m;
  return MonomialForm(f, ExponentMatrix{std::move(exps)}, std::vector<FieldElement>(s, f->one()));
}

MonomialForm random_form(std::uint32_t p, std::uint32_t e, std::size_t s, std::size_t r, std::uint64_t seed) {
  const auto f = build_field(p, e);
  std::mt19937_64 rng(seed);
  IntMatrix exps(s, r);
  std::vector<FieldElement> coeffs;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < s; ++j) exps(j, i) = static_cast<std::int64_t>(rng() % (f->order() + 1));
    exps(i % s, i) += 1;
    coeffs.push_back(f->antilog(rng() % f->unit_order()));
  }
  return MonomialForm(f, ExponentMatrix{std::move(exps)}, std::move(coeffs));
}

CountOptions bar_only() {
  CountOptions opts;
  opts.with_total = false;
  opts.force = true;
  return opts;
}

void BM_DiagonalFormula(benchmark::State& state) {
  const auto form = diagonal(11, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(n_bar_formula(form, bar_only()).n_bar);
}
BENCHMARK(BM_DiagonalFormula)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

void BM_DiagonalBruteforce(benchmark::State& state) {
  const auto form = diagonal(11, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(n_bar_bruteforce(form, bar_only()));
}
BENCHMARK(BM_DiagonalBruteforce)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_RandomFormula(benchmark::State& state) {
  const auto form = random_form(13, 1, 3, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(n_bar_formula(form, bar_only()).n_bar);
}
BENCHMARK(BM_RandomFormula)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_RandomBruteforce(benchmark::State& state) {
  const auto form = random_form(13, 1, 3, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(n_bar_bruteforce(form, bar_only()));
}
BENCHMARK(BM_RandomBruteforce)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_GaussSumTable(benchmark::State& state) {
  const CharacterTable table(build_field(2, static_cast<std::uint32_t>(state.range(0))));
  for (auto _ : state) {
    for (std::uint32_t t = 0; t < 16; ++t) benchmark::DoNotOptimize(table.gauss_sum(MultChar{t}, AdditiveChar::base()));
  }
}
BENCHMARK(BM_GaussSumTable)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
