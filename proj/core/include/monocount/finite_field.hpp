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

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace monocount {

/// An element of F_q stored as its packed power-basis coordinates:
/// index = c_0 + c_1 p + ... + c_{e-1} p^{e-1}. Zero is index 0, one is index 1.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const { return index_; }
  constexpr bool is_zero() const { return index_ == 0; }

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint32_t index_ = 0;
};

/// A fully tabulated finite field F_{p^e}.
///
/// The modulus is the smallest monic irreducible polynomial of degree e in
/// lexicographic order of (c_0, c_1, ..., c_{e-1}), and the generator is the
/// first primitive element in the same order. Both choices are deterministic,
/// so every character exponent in the library is reproducible across runs.
///
/// Immutable after construction; share it through build_field().
class FieldCtx {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 16;

  FieldCtx(std::uint32_t p, std::uint32_t e);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  std::uint32_t order() const { return q_; }
  /// q - 1, the order of K^0 and the modulus of every character exponent.
  std::uint32_t unit_order() const { return q_ - 1; }

  /// Monic modulus, low-degree coefficient first, length e + 1.
  std::span<const std::uint32_t> modulus() const { return modulus_; }
  FieldElement generator() const { return generator_; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  /// Image of an integer under Z -> F_p -> F_q.
  FieldElement from_int(std::int64_t value) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement x) const;
  /// True when x lies in the prime subfield.
  bool is_prime_subfield(FieldElement x) const { return x.index() < p_; }

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  FieldElement inv(FieldElement x) const;
  /// x^k with 0^0 = 1; negative k requires x != 0.
  FieldElement pow(FieldElement x, std::int64_t k) const;

  /// Schoolbook product reduced by the modulus, independent of the log tables.
  FieldElement mul_poly(FieldElement x, FieldElement y) const;

  /// Tr_{F_q/F_p}(x) as a residue in [0, p).
  std::uint32_t trace(FieldElement x) const { return trace_[x.index()]; }
  /// k in [0, q-1) with g^k = x.
  std::uint32_t discrete_log(FieldElement x) const;
  /// g^k for any k (reduced mod q-1).
  FieldElement antilog(std::uint64_t k) const { return FieldElement{antilog_[k % (q_ - 1)]}; }

  std::span<const std::uint32_t> antilog_table() const { return antilog_; }
  std::span<const std::uint32_t> log_table() const { return log_; }

  /// "p" or "p^e".
  std::string spec() const;

 private:
  std::vector<std::uint32_t> poly_mulmod(std::span<const std::uint32_t> a,
                                         std::span<const std::uint32_t> b) const;
  std::vector<std::uint32_t> poly_powmod(std::span<const std::uint32_t> a, std::uint64_t k) const;
  bool has_full_order(std::span<const std::uint32_t> a) const;

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  FieldElement generator_;
  std::vector<std::uint32_t> antilog_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> trace_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Build F_{p^e}. Throws InvalidArgument for non-prime p, e < 1, or p^e > 2^16.
FieldPtr build_field(std::uint32_t p, std::uint32_t e = 1);

/// Parse "p" or "p^e" and build the field.
FieldPtr parse_field_spec(const std::string& text);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace monocount
