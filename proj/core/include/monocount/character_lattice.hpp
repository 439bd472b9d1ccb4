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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "monocount/characters.hpp"

namespace monocount {

/// Dense row-major integer matrix. Products are overflow-checked.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Exponents of a monomial form: entry (j, i) is the power of x_j in monomial i.
/// s rows (variables) by r columns (monomials); entries >= 0, no all-zero column.
class ExponentMatrix {
 public:
  explicit ExponentMatrix(IntMatrix m);
  static ExponentMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    return ExponentMatrix{IntMatrix::from_rows(rows)};
  }

  std::size_t vars() const { return m_.rows(); }
  std::size_t terms() const { return m_.cols(); }
  std::int64_t operator()(std::size_t j, std::size_t i) const { return m_(j, i); }
  const IntMatrix& matrix() const { return m_; }

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

 private:
  IntMatrix m_;
};

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_k >= 0.
struct SnfDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  std::vector<std::int64_t> invariant_factors() const;
  std::size_t rank() const;
};

/// Exact over Z with unbounded intermediates. Throws ArithmeticOverflow when an
/// entry of U, D or V does not fit in 64 bits. The dual group code does not
/// depend on this: it runs the same elimination mod n.
SnfDecomposition smith_normal_form(const IntMatrix& m);

/// Generators-with-orders presentation of {t in (Z/n)^r : C t = 0 mod n}.
///
/// For the exponent matrix M of a monomial form this is the group of
/// characters of (K^0)^r that are trivial on the image of the monomial map:
/// in discrete-log coordinates x_j = g^{u_j}, monomial i takes the value
/// g^{sum_j m_ji u_j}, so chi_t evaluates to omega^{sum_j u_j (M t)_j}, which
/// is 1 for every u exactly when M t = 0 (mod q-1).
struct DualGroupBasis {
  std::uint64_t modulus = 1;
  IntMatrix constraints;
  std::vector<CharTuple> generators;
  std::vector<std::uint64_t> orders;
  std::uint64_t size = 1;
  std::vector<std::int64_t> invariant_factors;  // of C over Z/n: gcd(d_k, n)

  std::size_t length() const { return constraints.cols(); }
  bool contains(std::span<const std::uint32_t> t) const;
};

DualGroupBasis dual_group(const IntMatrix& constraints, std::uint64_t n);
inline DualGroupBasis dual_group(const ExponentMatrix& m, std::uint64_t n) { return dual_group(m.matrix(), n); }

/// The subgroup whose component product lambda = chi_1 ... chi_r is trivial.
DualGroupBasis restrict_lambda_trivial(const DualGroupBasis& basis);

using DualVisitor = std::function<void(std::span<const std::uint32_t>)>;

/// Visits every element once, generator 0 being the most significant mixed-radix digit.
void enumerate_dual(const DualGroupBasis& basis, const DualVisitor& visit);
/// Visits elements with mixed-radix index in [begin, end).
void enumerate_dual(const DualGroupBasis& basis, std::uint64_t begin, std::uint64_t end,
                    const DualVisitor& visit);

/// d = #{u in (Z/n)^s : M^T u = 0 mod n}, the kernel size of the monomial map.
std::uint64_t kernel_size_d(const ExponentMatrix& m, std::uint64_t n);

/// Exhaustive kernel of C mod n in lexicographic order. Oracle; throws LimitExceeded above limit tuples.
std::vector<CharTuple> kernel_bruteforce(const IntMatrix& constraints, std::uint64_t n, std::uint64_t limit);

}  // namespace monocount
