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

#pragma once

// Reference computations for the tests. They deliberately avoid the library's
// log tables, root tables and lattice code: field products go through
// mul_poly, discrete logs through repeated multiplication, characters through
// std::polar, and group sizes through exhaustive enumeration.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "monocount/monocount.hpp"

namespace monocount::oracle {

inline FieldElement power_by_multiplication(const FieldCtx& f, FieldElement x, std::uint64_t k) {
  FieldElement out = f.one();
  for (std::uint64_t i = 0; i < k; ++i) out = f.mul_poly(out, x);
  return out;
}

inline std::uint64_t multiplicative_order(const FieldCtx& f, FieldElement x) {
  FieldElement cur = x;
  std::uint64_t k = 1;
  while (cur != f.one()) {
    cur = f.mul_poly(cur, x);
    ++k;
  }
  return k;
}

/// Discrete log table built by walking powers of the generator with mul_poly.
inline std::vector<std::uint32_t> log_by_walking(const FieldCtx& f) {
  std::vector<std::uint32_t> log(f.order(), 0);
  FieldElement cur = f.one();
  for (std::uint32_t k = 0; k < f.unit_order(); ++k) {
    log[cur.index()] = k;
    cur = f.mul_poly(cur, f.generator());
  }
  return log;
}

/// Tr(x) = x + x^p + ... + x^{p^{e-1}} with multiplication by mul_poly.
inline std::uint32_t trace_by_frobenius(const FieldCtx& f, FieldElement x) {
  FieldElement acc = f.zero();
  FieldElement frob = x;
  for (std::uint32_t i = 0; i < f.degree(); ++i) {
    acc = f.add(acc, frob);
    frob = power_by_multiplication(f, frob, f.characteristic());
  }
  return f.coeffs(acc)[0];
}

inline std::complex<double> unit(double numerator, double denominator) {
  return std::polar(1.0, 2.0 * std::numbers::pi * numerator / denominator);
}

/// g(chi_t, psi_u) = sum over x in K of chi_t(x) psi_u(x), visiting elements in index order.
inline std::complex<double> gauss_sum_by_elements(const FieldCtx& f, std::uint32_t t, FieldElement u) {
  const auto log = log_by_walking(f);
  std::complex<double> sum{0.0, 0.0};
  for (std::uint32_t idx = 1; idx < f.order(); ++idx) {
    const FieldElement x{idx};
    const double chi = static_cast<double>((static_cast<std::uint64_t>(t) * log[idx]) % f.unit_order());
    const double psi = trace_by_frobenius(f, f.mul_poly(u, x));
    sum += unit(chi, f.unit_order()) * unit(psi, f.characteristic());
  }
  return sum;
}

/// #{u in (Z/n)^s : M^T u = 0 mod n}
inline std::uint64_t kernel_count(const ExponentMatrix& m, std::uint64_t n) {
  const std::size_t s = m.vars(), r = m.terms();
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < s; ++j) total *= n;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> u(s);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t j = 0; j < s; ++j) {
      u[j] = rest % n;
      rest /= n;
    }
    bool zero = true;
    for (std::size_t i = 0; i < r && zero; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < s; ++j) acc += static_cast<std::uint64_t>(m(j, i)) * u[j];
      zero = acc % n == 0;
    }
    count += zero;
  }
  return count;
}

/// N_bar by evaluating the form at every point of (K^0)^s with eval_form.
inline std::uint64_t n_bar_by_points(const MonomialForm& form) {
  const FieldCtx& f = form.field();
  const std::size_t s = form.vars();
  const std::uint64_t n = f.unit_order();
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < s; ++j) total *= n;
  std::vector<FieldElement> x(s);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t j = 0; j < s; ++j) {
      x[j] = FieldElement{static_cast<std::uint32_t>(1 + rest % n)};
      rest /= n;
    }
    count += eval_form(form, x).is_zero();
  }
  return count;
}

/// Exponent matrices mixing zeros, small powers and multiples of q-1; every column nonzero.
inline ExponentMatrix random_exponents(std::mt19937_64& rng, std::size_t s, std::size_t r, std::uint32_t q) {
  const std::int64_t n = q - 1;
  IntMatrix m(s, r);
  for (std::size_t i = 0; i < r; ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < s; ++j) {
      const auto kind = rng() % 6;
      std::int64_t v;
      if (kind == 0) {
        v = 0;
      } else if (kind == 1) {
        v = n * static_cast<std::int64_t>(1 + rng() % 2);
      } else {
        v = 1 + static_cast<std::int64_t>(rng() % (q + 1));
      }
      m(j, i) = v;
      nonzero = nonzero || v != 0;
    }
    if (!nonzero) m(rng() % s, i) = 1 + static_cast<std::int64_t>(rng() % (q + 1));
  }
  return ExponentMatrix{std::move(m)};
}

inline MonomialForm random_form(std::mt19937_64& rng, const FieldPtr& field, std::size_t s, std::size_t r) {
  std::vector<FieldElement> a;
  for (std::size_t i = 0; i < r; ++i) a.push_back(FieldElement{static_cast<std::uint32_t>(1 + rng() % field->unit_order())});
  return MonomialForm(field, random_exponents(rng, s, r, field->order()), std::move(a));
}

inline const std::vector<std::pair<std::uint32_t, std::uint32_t>>& suite_fields() {
  static const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields = {
      {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}};
  return fields;
}

}  // namespace monocount::oracle
