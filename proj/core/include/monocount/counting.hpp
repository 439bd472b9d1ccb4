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

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monocount/character_lattice.hpp"
#include "monocount/characters.hpp"
#include "monocount/finite_field.hpp"

namespace monocount {

/// The equation  sum_i a_i x_1^{m_1i} ... x_s^{m_si} = 0  over a finite field.
class MonomialForm {
 public:
  MonomialForm(FieldPtr field, ExponentMatrix exponents, std::vector<FieldElement> coefficients);

  const FieldCtx& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const ExponentMatrix& exponents() const { return exponents_; }
  std::span<const FieldElement> coefficients() const { return coefficients_; }
  std::size_t vars() const { return exponents_.vars(); }
  std::size_t terms() const { return exponents_.terms(); }

  /// Exponents that are positive multiples of q-1. The counting formula does
  /// not need them excluded, but they are reported.
  std::vector<std::string> exponent_warnings() const;

  friend bool operator==(const MonomialForm& a, const MonomialForm& b);

 private:
  FieldPtr field_;
  ExponentMatrix exponents_;
  std::vector<FieldElement> coefficients_;
};

struct CountOptions {
  /// Upper bound on enumerated points or characters per enumeration.
  std::uint64_t limit = 10'000'000;
  /// Ignore `limit`.
  bool force = false;
  /// Worker threads for the enumerations. Results do not depend on this.
  unsigned threads = 1;
  /// Also assemble the count over all of K^s.
  bool with_total = true;
};

struct GroupSizes {
  std::uint64_t d = 0;               // kernel size of the monomial map
  std::uint64_t dual_size = 0;       // characters trivial on the image
  std::uint64_t dual_star_size = 0;  // ... with trivial component product
};

struct CountReport {
  std::uint64_t n_bar = 0;    // solutions with every coordinate nonzero
  std::uint64_t n_total = 0;  // solutions in K^s (0 when not requested)
  bool has_total = false;
  Complex char_sum;           // sum over the lambda-trivial dual of conj(chi(a)) G_0(chi)
  double residual = 0.0;      // distance of the raw count from the reported integer
  double tolerance = 0.0;
  GroupSizes sizes;
  std::vector<std::int64_t> invariant_factors;  // of the exponent matrix mod q-1
  std::vector<std::pair<std::string, double>> timings;  // seconds per phase
  std::vector<std::string> warnings;
};

FieldElement eval_form(const MonomialForm& form, std::span<const FieldElement> x);

/// Sum over x in (K^0)^s of psi(F(x)), by enumeration.
Complex s_bar_direct(const MonomialForm& form, AdditiveChar psi, const CountOptions& opts = {});
/// (q-1)^{s-r} * sum over the dual group of conj(chi(a)) * G_psi(chi).
Complex s_bar_via_characters(const MonomialForm& form, AdditiveChar psi, const CountOptions& opts = {});
/// d * sum over y in the image of the monomial map of psi(a . y).
Complex s_bar_via_image(const MonomialForm& form, AdditiveChar psi, const CountOptions& opts = {});

/// Solutions in (K^0)^s from the character-sum formula. Throws
/// VerificationFailure when the raw value is not within tolerance of an integer.
CountReport n_bar_formula(const MonomialForm& form, const CountOptions& opts = {});
std::uint64_t n_bar_bruteforce(const MonomialForm& form, const CountOptions& opts = {});

/// Solutions in K^s: sum over zero patterns of the nonzero-coordinate count of the surviving form.
std::uint64_t n_total_inclusion_exclusion(const MonomialForm& form, const CountOptions& opts = {});
std::uint64_t n_total_bruteforce(const MonomialForm& form, const CountOptions& opts = {});

struct PsiSumCheck {
  Complex direct;                      // sum over u in K^0 of s_bar_direct(psi_u)
  double from_count = 0.0;             // q * N_bar - (q-1)^s, N_bar by enumeration
  Complex character_side;              // (q-1)^{s-r+1} * sum of conj(chi(a)) G_0(chi)
  Complex character_side_unconjugated; // same with chi(a) in place of conj(chi(a))
  bool unconjugated_agrees = false;
};

/// Cross-checks the three expressions for the sum of S_bar over all nontrivial
/// additive characters. Throws VerificationFailure if the first three disagree
/// beyond 1e-6 relative.
PsiSumCheck sum_over_psi_check(const MonomialForm& form, const CountOptions& opts = {});

/// Tolerance used for the integrality check: 1e-6 * max(1, (q-1)^{s/2}).
double rounding_tolerance(const MonomialForm& form);

}  // namespace monocount
