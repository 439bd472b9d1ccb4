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

#include "monocount/characters.hpp"

#include <cmath>
#include <numbers>

#include "monocount/errors.hpp"

namespace monocount {

namespace {

std::vector<Complex> roots_of_unity(std::uint32_t order) {
  std::vector<Complex> roots(order);
  for (std::uint32_t k = 0; k < order; ++k) {
    // Fold to the nearest of k and k - order so the angle stays in [-pi, pi].
    const double num = (2 * k <= order) ? static_cast<double>(k) : static_cast<double>(k) - order;
    const double angle = 2.0 * std::numbers::pi * num / order;
    roots[k] = Complex{std::cos(angle), std::sin(angle)};
  }
  if (order % 2 == 0) roots[order / 2] = Complex{-1.0, 0.0};
  if (order % 4 == 0) {
    roots[order / 4] = Complex{0.0, 1.0};
    roots[3 * order / 4] = Complex{0.0, -1.0};
  }
  return roots;
}

}  // namespace

AdditiveChar::AdditiveChar(FieldElement scale) : scale_(scale) {
  if (scale.is_zero()) throw InvalidArgument("additive character scale must be nonzero");
}

MultChar lambda_exponent(std::span<const std::uint32_t> chi, std::uint32_t q) {
  const std::uint64_t n = q - 1;
  std::uint64_t sum = 0;
  for (auto t : chi) sum = (sum + t) % n;
  return MultChar{static_cast<std::uint32_t>(sum)};
}

CharacterTable::CharacterTable(FieldPtr field)
    : field_(std::move(field)),
      unit_roots_(roots_of_unity(field_->unit_order())),
      prime_roots_(roots_of_unity(field_->characteristic())) {}

Complex CharacterTable::additive(AdditiveChar psi, FieldElement x) const {
  return prime_roots_[field_->trace(field_->mul(psi.scale(), x))];
}

Complex CharacterTable::multiplicative(MultChar chi, FieldElement x) const {
  if (x.is_zero()) return Complex{0.0, 0.0};
  const std::uint64_t n = field_->unit_order();
  return unit_roots_[(static_cast<std::uint64_t>(chi.exponent % n) * field_->discrete_log(x)) % n];
}

Complex CharacterTable::multiplicative_conj(MultChar chi, FieldElement x) const {
  return std::conj(multiplicative(chi, x));
}

Complex CharacterTable::gauss_sum(MultChar chi, AdditiveChar psi) const {
  const FieldCtx& f = *field_;
  const std::uint64_t n = f.unit_order();
  const std::uint64_t t = chi.exponent % n;
  const auto antilog = f.antilog_table();
  const std::uint32_t log_u = f.discrete_log(psi.scale());
  Complex sum{0.0, 0.0};
  std::uint64_t chi_exp = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    // psi_u(g^k) = psi_0(g^{k + log u})
    const std::uint32_t x = antilog[(k + log_u) % n];
    sum += unit_roots_[chi_exp] * prime_roots_[f.trace(FieldElement{x})];
    chi_exp += t;
    if (chi_exp >= n) chi_exp -= n;
  }
  return sum;
}

Complex CharacterTable::gauss_sum_rescaled(MultChar chi, AdditiveChar psi) const {
  return multiplicative_conj(chi, psi.scale()) * gauss_sum(chi, AdditiveChar::base());
}

Complex CharacterTable::product_gauss_sum(std::span<const std::uint32_t> chi, AdditiveChar psi) const {
  Complex prod{1.0, 0.0};
  for (auto t : chi) prod *= gauss_sum(MultChar{t}, psi);
  return prod;
}

Complex CharacterTable::char_tuple_eval(std::span<const std::uint32_t> chi,
                                        std::span<const FieldElement> y) const {
  if (chi.size() != y.size()) throw InvalidArgument("character tuple and argument lengths differ");
  const std::uint64_t n = field_->unit_order();
  std::uint64_t exponent = 0;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    if (y[i].is_zero()) return Complex{0.0, 0.0};
    exponent = (exponent + static_cast<std::uint64_t>(chi[i] % n) * field_->discrete_log(y[i])) % n;
  }
  return unit_roots_[exponent];
}

GaussSumCache::GaussSumCache(const CharacterTable& table, AdditiveChar psi,
                             std::span<const std::uint32_t> exponents)
    : values_(table.field().unit_order()), present_(table.field().unit_order(), 0) {
  for (auto t : exponents) {
    if (t >= values_.size()) throw InvalidArgument("character exponent not reduced mod q-1");
    if (present_[t]) continue;
    values_[t] = table.gauss_sum(MultChar{t}, psi);
    present_[t] = 1;
  }
}

}  // namespace monocount
