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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "monocount/finite_field.hpp"

namespace monocount {

using Complex = std::complex<double>;

/// chi_t(g^k) = exp(2 pi i t k / (q-1)), extended by chi_t(0) = 0.
struct MultChar {
  std::uint32_t exponent = 0;
};

/// psi_u(x) = exp(2 pi i Tr(u x) / p). The scale u must be nonzero.
class AdditiveChar {
 public:
  explicit AdditiveChar(FieldElement scale);
  /// psi_0 = psi_1, the reference character.
  static AdditiveChar base() { return AdditiveChar{FieldElement{1}}; }

  FieldElement scale() const { return scale_; }

 private:
  FieldElement scale_;
};

/// Exponents (t_1, ..., t_r) of a character of (K^0)^r, each reduced mod q-1.
using CharTuple = std::vector<std::uint32_t>;

/// Exponent of lambda = chi_1 ... chi_r: (sum t_i) mod (q-1).
MultChar lambda_exponent(std::span<const std::uint32_t> chi, std::uint32_t q);

/// Character values and Gauss sums over one field.
///
/// Holds the two root-of-unity tables the characters need: order q-1 for
/// multiplicative characters and order p for additive ones. A single table of
/// order lcm(p, q-1) would need up to 2^32 entries for prime q near 2^16.
class CharacterTable {
 public:
  explicit CharacterTable(FieldPtr field);

  const FieldCtx& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  /// exp(2 pi i k / (q-1)), k taken mod q-1.
  Complex unit_root(std::uint64_t k) const { return unit_roots_[k % unit_roots_.size()]; }
  /// exp(2 pi i k / p), k taken mod p.
  Complex prime_root(std::uint64_t k) const { return prime_roots_[k % prime_roots_.size()]; }

  Complex additive(AdditiveChar psi, FieldElement x) const;
  Complex multiplicative(MultChar chi, FieldElement x) const;
  /// conj(chi(x)); zero at x = 0.
  Complex multiplicative_conj(MultChar chi, FieldElement x) const;

  /// g(chi, psi) = sum over x in K^0 of chi(x) psi(x), summed along the antilog table.
  Complex gauss_sum(MultChar chi, AdditiveChar psi) const;
  /// conj(chi(u)) * g(chi, psi_0); equals gauss_sum(chi, psi_u).
  Complex gauss_sum_rescaled(MultChar chi, AdditiveChar psi) const;
  /// G(chi) = g(chi_1) ... g(chi_r).
  Complex product_gauss_sum(std::span<const std::uint32_t> chi, AdditiveChar psi) const;
  /// chi_1(y_1) ... chi_r(y_r); zero if any y_i is zero.
  Complex char_tuple_eval(std::span<const std::uint32_t> chi, std::span<const FieldElement> y) const;

 private:
  FieldPtr field_;
  std::vector<Complex> unit_roots_;
  std::vector<Complex> prime_roots_;
};

/// Gauss sums g(chi_t, psi) for a chosen set of exponents t, computed once.
/// Exponents outside the set are not available.
class GaussSumCache {
 public:
  GaussSumCache(const CharacterTable& table, AdditiveChar psi, std::span<const std::uint32_t> exponents);

  const Complex& operator[](std::uint32_t t) const { return values_[t]; }
  bool contains(std::uint32_t t) const { return present_[t] != 0; }

 private:
  std::vector<Complex> values_;
  std::vector<unsigned char> present_;
};

}  // namespace monocount
