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

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "oracles.hpp"

namespace monocount {
namespace {

std::int64_t determinant(const IntMatrix& m) {
  // Bareiss fraction-free elimination; only used on small unimodular matrices.
  const std::size_t n = m.rows();
  IntMatrix a = m;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    }
    prev = a(k, k);
  }
  return n == 0 ? 1 : sign * a(n - 1, n - 1);
}

void expect_valid_snf(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  EXPECT_EQ(snf.u * m * snf.v, snf.d);
  EXPECT_EQ(std::abs(determinant(snf.u)), 1);
  EXPECT_EQ(std::abs(determinant(snf.v)), 1);
  for (std::size_t i = 0; i < snf.d.rows(); ++i) {
    for (std::size_t j = 0; j < snf.d.cols(); ++j) {
      if (i != j) EXPECT_EQ(snf.d(i, j), 0);
    }
  }
  const auto f = snf.invariant_factors();
  for (std::size_t k = 0; k + 1 < f.size(); ++k) {
    EXPECT_GE(f[k], 0);
    if (f[k] == 0) {
      EXPECT_EQ(f[k + 1], 0);
    } else {
      EXPECT_EQ(f[k + 1] % f[k], 0);
    }
  }
}

TEST(SmithNormalForm, Examples) {
  const auto id = smith_normal_form(IntMatrix::identity(2));
  EXPECT_EQ(id.invariant_factors(), (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{2}})).invariant_factors(), (std::vector<std::int64_t>{2}));
  const auto m = IntMatrix::from_rows({{2, 4}, {6, 8}});
  EXPECT_EQ(smith_normal_form(m).invariant_factors(), (std::vector<std::int64_t>{2, 4}));
  expect_valid_snf(m);
}

TEST(SmithNormalForm, RectangularAndDegenerate) {
  expect_valid_snf(IntMatrix::from_rows({{1, 1}}));
  expect_valid_snf(IntMatrix::from_rows({{0, 0, 0}, {0, 0, 0}}));
  expect_valid_snf(IntMatrix::from_rows({{4, 6, 10}, {6, 9, 15}}));
  expect_valid_snf(IntMatrix::from_rows({{3}, {5}, {7}}));
  EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{4, 6, 10}, {6, 9, 15}})).rank(), 1u);
}

TEST(SmithNormalForm, RandomMatricesSatisfyContract) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<std::int64_t>(rng() % 41) - 20;
    expect_valid_snf(m);
  }
}

TEST(SmithNormalForm, OverflowIsDetected) {
  constexpr std::int64_t kMax = INT64_MAX;
  // Determinant 2 - 3 kMax does not fit in 64 bits.
  EXPECT_THROW(smith_normal_form(IntMatrix::from_rows({{2, kMax}, {3, 1}})), ArithmeticOverflow);
  // Exact intermediates are unbounded, but the second invariant factor is kMax * (kMax - 1).
  EXPECT_THROW(smith_normal_form(IntMatrix::from_rows({{kMax, 0}, {0, kMax - 1}})), ArithmeticOverflow);
  EXPECT_THROW(IntMatrix::from_rows({{kMax / 2}}) * IntMatrix::from_rows({{4}}), ArithmeticOverflow);
}

TEST(DualGroup, Examples) {
  for (std::uint64_t n : {1, 4, 12}) {
    const auto basis = dual_group(IntMatrix::identity(3), n);
    EXPECT_EQ(basis.size, 1u);
  }
  const auto two = dual_group(ExponentMatrix::from_rows({{2}}), 4);
  EXPECT_EQ(two.size, 2u);
  std::vector<CharTuple> seen;
  enumerate_dual(two, [&](std::span<const std::uint32_t> t) { seen.emplace_back(t.begin(), t.end()); });
  EXPECT_EQ(seen, (std::vector<CharTuple>{{0}, {2}}));

  const auto anti = dual_group(ExponentMatrix::from_rows({{1, 1}}), 4);
  EXPECT_EQ(anti.size, 4u);
  std::set<CharTuple> got;
  enumerate_dual(anti, [&](std::span<const std::uint32_t> t) { got.emplace(t.begin(), t.end()); });
  EXPECT_EQ(got, (std::set<CharTuple>{{0, 0}, {1, 3}, {2, 2}, {3, 1}}));
}

TEST(DualGroup, TrivialModulus) {
  const auto basis = dual_group(ExponentMatrix::from_rows({{1, 2}, {0, 3}}), 1);
  EXPECT_EQ(basis.size, 1u);
  std::vector<CharTuple> seen;
  enumerate_dual(basis, [&](std::span<const std::uint32_t> t) { seen.emplace_back(t.begin(), t.end()); });
  EXPECT_EQ(seen, (std::vector<CharTuple>{{0, 0}}));
  EXPECT_EQ(restrict_lambda_trivial(basis).size, 1u);
  EXPECT_EQ(kernel_size_d(ExponentMatrix::from_rows({{1, 2}, {0, 3}}), 1), 1u);
}

TEST(DualGroup, RestrictLambdaTrivialExamples) {
  const auto two = dual_group(ExponentMatrix::from_rows({{2}}), 4);
  const auto two_star = restrict_lambda_trivial(two);
  EXPECT_EQ(two_star.size, 1u);
  const auto anti = dual_group(ExponentMatrix::from_rows({{1, 1}}), 4);
  EXPECT_EQ(restrict_lambda_trivial(anti).size, anti.size);
}

TEST(KernelSize, Examples) {
  EXPECT_EQ(kernel_size_d(ExponentMatrix{IntMatrix::identity(3)}, 10), 1u);
  EXPECT_EQ(kernel_size_d(ExponentMatrix::from_rows({{2}}), 4), 2u);
  // More variables than terms: the kernel has free directions.
  EXPECT_EQ(kernel_size_d(ExponentMatrix::from_rows({{1}, {1}}), 6), 6u);
}

TEST(ExponentMatrixValidation, RejectsConstantTermsAndNegatives) {
  EXPECT_THROW(ExponentMatrix::from_rows({{1, 0}, {2, 0}}), InvalidArgument);
  EXPECT_THROW(ExponentMatrix::from_rows({{-1}}), InvalidArgument);
  EXPECT_THROW(ExponentMatrix{IntMatrix{}}, InvalidArgument);
}

// Property sweep: n <= 12, small s and r, random exponents including zeros
// and multiples of n.
TEST(DualGroup, MatchesBruteForceKernel) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const std::uint64_t n = 1 + rng() % 12;
    const std::size_t s = 1 + rng() % 3, r = 1 + rng() % 3;
    const auto m = oracle::random_exponents(rng, s, r, static_cast<std::uint32_t>(n + 1));
    const auto basis = dual_group(m, n);

    std::vector<CharTuple> listed;
    enumerate_dual(basis, [&](std::span<const std::uint32_t> t) { listed.emplace_back(t.begin(), t.end()); });
    ASSERT_EQ(listed.size(), basis.size);
    std::vector<CharTuple> sorted = listed;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_TRUE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) << "duplicate tuple";
    EXPECT_EQ(sorted, kernel_bruteforce(m.matrix(), n, 1'000'000));

    const std::uint64_t d = kernel_size_d(m, n);
    EXPECT_EQ(d, oracle::kernel_count(m, n));
    // |dual| * n^s = d * n^r
    std::uint64_t lhs = basis.size, rhs = d;
    for (std::size_t j = 0; j < s; ++j) lhs *= n;
    for (std::size_t i = 0; i < r; ++i) rhs *= n;
    EXPECT_EQ(lhs, rhs);

    const auto star = restrict_lambda_trivial(basis);
    EXPECT_EQ(basis.size % star.size, 0u);
    std::vector<CharTuple> filtered;
    for (const auto& t : sorted) {
      if (lambda_exponent(t, static_cast<std::uint32_t>(n + 1)).exponent == 0) filtered.push_back(t);
    }
    std::vector<CharTuple> star_listed;
    enumerate_dual(star, [&](std::span<const std::uint32_t> t) { star_listed.emplace_back(t.begin(), t.end()); });
    std::sort(star_listed.begin(), star_listed.end());
    EXPECT_EQ(star_listed, filtered);

    // Closure under addition.
    for (int k = 0; k < 5 && !listed.empty(); ++k) {
      const auto& a = listed[rng() % listed.size()];
      const auto& b = listed[rng() % listed.size()];
      CharTuple c(r);
      for (std::size_t i = 0; i < r; ++i) c[i] = static_cast<std::uint32_t>((a[i] + b[i]) % n);
      EXPECT_TRUE(basis.contains(c));
    }
  }
}

TEST(DualGroup, LargeExponentsStayExact) {
  std::mt19937_64 rng(77);
  // Small moduli against brute force, entries far above n.
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t n = 2 + rng() % 11;
    IntMatrix m(1 + rng() % 4, 1 + rng() % 3);
    for (std::size_t j = 0; j < m.rows(); ++j)
      for (std::size_t i = 0; i < m.cols(); ++i) m(j, i) = 1 + static_cast<std::int64_t>(rng() % 1'000'000);
    const auto basis = dual_group(m, n);
    std::vector<CharTuple> listed;
    enumerate_dual(basis, [&](std::span<const std::uint32_t> t) { listed.emplace_back(t.begin(), t.end()); });
    std::sort(listed.begin(), listed.end());
    EXPECT_EQ(listed, kernel_bruteforce(m, n, 1'000'000));
  }
  // q = 2^16 with full-range exponents: size law and membership of the generators.
  const std::uint64_t n = 65535;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t s = 1 + rng() % 3, r = 1 + rng() % 3;
    IntMatrix raw(s, r);
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t i = 0; i < r; ++i) raw(j, i) = 1 + static_cast<std::int64_t>(rng() % 65536);
    const ExponentMatrix m{raw};
    const auto basis = dual_group(m, n);
    for (const auto& g : basis.generators) EXPECT_TRUE(basis.contains(g));
    const std::uint64_t d = kernel_size_d(m, n);
    // |dual| n^s = d n^r, compared after cancelling the common power of n.
    __extension__ using Wide = unsigned __int128;
    Wide lhs = basis.size, rhs = d;
    for (std::size_t k = std::min(s, r); k < s; ++k) lhs *= n;
    for (std::size_t k = std::min(s, r); k < r; ++k) rhs *= n;
    EXPECT_TRUE(lhs == rhs);
    EXPECT_EQ(basis.size % restrict_lambda_trivial(basis).size, 0u);
  }
}

TEST(DualGroup, PartitionedEnumerationMatchesSinglePass) {
  const auto basis = dual_group(ExponentMatrix::from_rows({{1, 2, 3}, {0, 4, 2}}), 12);
  std::vector<CharTuple> whole, pieces;
  enumerate_dual(basis, [&](std::span<const std::uint32_t> t) { whole.emplace_back(t.begin(), t.end()); });
  for (std::uint64_t begin = 0; begin < basis.size; begin += 5) {
    enumerate_dual(basis, begin, begin + 5, [&](std::span<const std::uint32_t> t) { pieces.emplace_back(t.begin(), t.end()); });
  }
  EXPECT_EQ(whole, pieces);
}

TEST(DualGroup, CharactersAreTrivialOnTheImage) {
  const auto f = build_field(13);
  const CharacterTable table(f);
  const auto m = ExponentMatrix::from_rows({{2, 0, 3}, {4, 6, 0}});
  const auto basis = dual_group(m, f->unit_order());
  std::mt19937_64 rng(5);
  enumerate_dual(basis, [&](std::span<const std::uint32_t> chi) {
    for (int k = 0; k < 4; ++k) {
      std::vector<FieldElement> x{f->antilog(rng() % 12), f->antilog(rng() % 12)};
      std::vector<FieldElement> y;
      for (std::size_t i = 0; i < m.terms(); ++i) {
        FieldElement v = f->one();
        for (std::size_t j = 0; j < m.vars(); ++j) v = f->mul(v, f->pow(x[j], m(j, i)));
        y.push_back(v);
      }
      EXPECT_LT(std::abs(table.char_tuple_eval(chi, y) - Complex{1.0, 0.0}), 1e-9);
    }
  });
}

TEST(KernelBruteforce, RespectsLimit) {
  EXPECT_THROW(kernel_bruteforce(IntMatrix::from_rows({{1, 1, 1, 1}}), 100, 1000), LimitExceeded);
}

}  // namespace
}  // namespace monocount
