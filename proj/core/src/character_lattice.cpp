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

#include "monocount/character_lattice.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "monocount/errors.hpp"

namespace monocount {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow("int64 overflow in integer matrix product");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticOverflow("int64 overflow in integer matrix elimination");
  return out;
}

std::uint64_t checked_umul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow("group order exceeds 64 bits");
  return out;
}

std::uint64_t mod_n(std::int64_t v, std::uint64_t n) {
  const auto sn = static_cast<std::int64_t>(n);
  std::int64_t r = v % sn;
  if (r < 0) r += sn;
  return static_cast<std::uint64_t>(r);
}

// Dense matrix over an unbounded or widened integer type, used only inside the
// eliminations below.
template <class T>
struct Grid {
  std::size_t rows = 0, cols = 0;
  std::vector<T> a;
  Grid(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}
  T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  static Grid identity(std::size_t n) {
    Grid g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = T(1);
    return g;
  }
  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap((*this)(r, i), (*this)(r, k));
  }
};

template <class T>
T abs_of(const T& v) {
  return v < T(0) ? T(-v) : v;
}

// Returns g = gcd(a, b) >= 0 with x*a + y*b = g.
template <class T>
T ext_gcd(T a, T b, T& x, T& y) {
  T x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != T(0)) {
    const T q = a / b;
    T t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < T(0)) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

// Smith elimination on d, mirroring row operations into u (when given) and
// column operations into v. `reduce` is applied to every entry written; it is
// the identity for exact work over Z and reduction mod n otherwise. Pivots
// are smallest in magnitude; a non-dividing entry is merged into the pivot by
// a determinant-one Bezout step, so the pivot strictly shrinks until it
// divides its row, its column and the trailing block.
template <class T, class Reduce>
void smith_eliminate(Grid<T>& d, Grid<T>* u, Grid<T>& v, Reduce reduce) {
  const std::size_t rows = d.rows, cols = d.cols;
  const auto reduce_all = [&](Grid<T>& g) {
    for (auto& x : g.a) x = reduce(x);
  };
  reduce_all(d);
  reduce_all(v);
  if (u) reduce_all(*u);

  // rows (k, i) <- [[x, y], [-b/g, a/g]] (rows (k, i)), or the column analogue.
  const auto combine_rows = [&](Grid<T>& g, std::size_t k, std::size_t i, const T& x, const T& y, const T& p,
                                const T& q) {
    for (std::size_t j = 0; j < g.cols; ++j) {
      const T rk = g(k, j), ri = g(i, j);
      g(k, j) = reduce(x * rk + y * ri);
      g(i, j) = reduce(p * ri - q * rk);
    }
  };
  const auto combine_cols = [&](Grid<T>& g, std::size_t k, std::size_t j, const T& x, const T& y, const T& p,
                                const T& q) {
    for (std::size_t r = 0; r < g.rows; ++r) {
      const T ck = g(r, k), cj = g(r, j);
      g(r, k) = reduce(x * ck + y * cj);
      g(r, j) = reduce(p * cj - q * ck);
    }
  };

  const std::size_t diag = std::min(rows, cols);
  for (std::size_t k = 0; k < diag; ++k) {
    for (;;) {
      std::size_t pi = rows, pj = cols;
      T best = 0;
      for (std::size_t i = k; i < rows; ++i) {
        for (std::size_t j = k; j < cols; ++j) {
          if (d(i, j) == T(0)) continue;
          const T mag = abs_of(d(i, j));
          if (best == T(0) || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      }
      if (best == T(0)) return;  // trailing block is zero

      d.swap_rows(k, pi);
      if (u) u->swap_rows(k, pi);
      d.swap_cols(k, pj);
      v.swap_cols(k, pj);

      bool clean = false;
      while (!clean) {
        clean = true;
        for (std::size_t i = k + 1; i < rows; ++i) {
          if (d(i, k) == T(0)) continue;
          T x, y;
          const T a = d(k, k), b = d(i, k);
          const T g = ext_gcd(a, b, x, y);
          if (g == abs_of(a)) {
            // Pivot divides: plain row subtraction keeps row k unchanged.
            x = a < T(0) ? T(-1) : T(1);
            y = 0;
          }
          const T p = a / g, q = b / g;
          combine_rows(d, k, i, x, y, p, q);
          if (u) combine_rows(*u, k, i, x, y, p, q);
        }
        for (std::size_t j = k + 1; j < cols; ++j) {
          if (d(k, j) == T(0)) continue;
          T x, y;
          const T a = d(k, k), b = d(k, j);
          const T g = ext_gcd(a, b, x, y);
          if (g == abs_of(a)) {
            x = a < T(0) ? T(-1) : T(1);
            y = 0;
          } else {
            clean = false;  // the pivot changed, so column k may need another pass
          }
          const T p = a / g, q = b / g;
          combine_cols(d, k, j, x, y, p, q);
          combine_cols(v, k, j, x, y, p, q);
        }
      }

      // Divisibility: fold an offending row into row k and reduce again.
      bool divides = true;
      for (std::size_t i = k + 1; i < rows && divides; ++i) {
        for (std::size_t j = k + 1; j < cols; ++j) {
          if (d(i, j) % d(k, k) != T(0)) {
            for (std::size_t c = 0; c < cols; ++c) d(k, c) = reduce(d(k, c) + d(i, c));
            if (u) {
              for (std::size_t c = 0; c < u->cols; ++c) (*u)(k, c) = reduce((*u)(k, c) + (*u)(i, c));
            }
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
  }
}

std::int64_t narrow(const boost::multiprecision::cpp_int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw ArithmeticOverflow("Smith normal form entry exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

template <class T>
Grid<T> to_grid(const IntMatrix& m) {
  Grid<T> g(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g(i, j) = T(m(i, j));
  return g;
}

IntMatrix from_big(const Grid<boost::multiprecision::cpp_int>& g) {
  IntMatrix m(g.rows, g.cols);
  for (std::size_t i = 0; i < g.rows; ++i)
    for (std::size_t j = 0; j < g.cols; ++j) m(i, j) = narrow(g(i, j));
  return m;
}

// Diagonal of a Smith form of C over Z/n (entries gcd(d_k, n), so a zero
// diagonal entry reads n) together with V mod n. Entries stay below n <= 2^31,
// so products fit comfortably in 128 bits.
__extension__ using Wide = __int128;

struct ModularSmith {
  std::vector<std::uint64_t> factors;
  Grid<Wide> v;
};

ModularSmith modular_smith(const IntMatrix& c, std::uint64_t n) {
  const Wide wn = static_cast<Wide>(n);
  Grid<Wide> d = to_grid<Wide>(c);
  Grid<Wide> v = Grid<Wide>::identity(c.cols());
  smith_eliminate<Wide>(d, nullptr, v, [wn](const Wide& x) {
    Wide r = x % wn;
    return r < 0 ? r + wn : r;
  });
  ModularSmith out{{}, std::move(v)};
  for (std::size_t k = 0; k < std::min(d.rows, d.cols); ++k) {
    out.factors.push_back(std::gcd(static_cast<std::uint64_t>(d(k, k)), n));
  }
  return out;
}
}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return IntMatrix{};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw InvalidArgument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidArgument("matrix dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = checked_add(out(i, j), checked_mul(a, rhs(k, j)));
    }
  }
  return out;
}

ExponentMatrix::ExponentMatrix(IntMatrix m) : m_(std::move(m)) {
  if (m_.rows() < 1 || m_.cols() < 1) throw InvalidArgument("exponent matrix needs at least one variable and one term");
  for (std::size_t i = 0; i < m_.cols(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < m_.rows(); ++j) {
      if (m_(j, i) < 0) throw InvalidArgument("negative exponent");
      nonzero = nonzero || m_(j, i) != 0;
    }
    if (!nonzero) throw InvalidArgument("term " + std::to_string(i + 1) + " is a constant (all exponents zero)");
  }
}

std::vector<std::int64_t> SnfDecomposition::invariant_factors() const {
  std::vector<std::int64_t> out;
  const std::size_t m = std::min(d.rows(), d.cols());
  for (std::size_t k = 0; k < m; ++k) out.push_back(d(k, k));
  return out;
}

std::size_t SnfDecomposition::rank() const {
  std::size_t r = 0;
  for (auto f : invariant_factors()) r += f != 0;
  return r;
}

SnfDecomposition smith_normal_form(const IntMatrix& m) {
  using Big = boost::multiprecision::cpp_int;
  Grid<Big> d = to_grid<Big>(m);
  Grid<Big> u = Grid<Big>::identity(m.rows());
  Grid<Big> v = Grid<Big>::identity(m.cols());
  smith_eliminate<Big>(d, &u, v, [](const Big& x) { return x; });
  for (std::size_t k = 0; k < std::min(d.rows, d.cols); ++k) {
    if (d(k, k) < 0) {
      for (std::size_t j = 0; j < d.cols; ++j) d(k, j) = -d(k, j);
      for (std::size_t j = 0; j < u.cols; ++j) u(k, j) = -u(k, j);
    }
  }
  return {from_big(u), from_big(d), from_big(v)};
}
bool DualGroupBasis::contains(std::span<const std::uint32_t> t) const {
  if (t.size() != constraints.cols()) return false;
  for (std::size_t j = 0; j < constraints.rows(); ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      acc = (acc + mod_n(constraints(j, i), modulus) * (t[i] % modulus)) % modulus;
    }
    if (acc != 0) return false;
  }
  return true;
}

DualGroupBasis dual_group(const IntMatrix& constraints, std::uint64_t n) {
  if (n < 1) throw InvalidArgument("character modulus must be positive");
  if (n > (std::uint64_t{1} << 31)) throw InvalidArgument("character modulus too large");
  DualGroupBasis basis;
  basis.modulus = n;
  basis.constraints = constraints;
  const auto smith = modular_smith(constraints, n);
  basis.invariant_factors.assign(smith.factors.begin(), smith.factors.end());

  // Writing t = V w turns C t = 0 into d_k w_k = 0 (mod n): w_k ranges over
  // multiples of n / gcd(d_k, n), a cyclic group of order gcd(d_k, n).
  // Coordinates beyond the diagonal are unconstrained.
  const std::size_t r = constraints.cols();
  for (std::size_t k = 0; k < r; ++k) {
    const std::uint64_t order = k < smith.factors.size() ? smith.factors[k] : n;
    if (order == 1) continue;
    const std::uint64_t step = n / order;
    CharTuple gen(r);
    for (std::size_t i = 0; i < r; ++i) {
      gen[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(smith.v(i, k)) * step) % n);
    }
    basis.generators.push_back(std::move(gen));
    basis.orders.push_back(order);
    basis.size = checked_umul(basis.size, order);
  }
  return basis;
}

DualGroupBasis restrict_lambda_trivial(const DualGroupBasis& basis) {
  const IntMatrix& c = basis.constraints;
  IntMatrix extended(c.rows() + 1, c.cols());
  for (std::size_t j = 0; j < c.rows(); ++j) {
    for (std::size_t i = 0; i < c.cols(); ++i) extended(j, i) = c(j, i);
  }
  for (std::size_t i = 0; i < c.cols(); ++i) extended(c.rows(), i) = 1;
  return dual_group(extended, basis.modulus);
}

void enumerate_dual(const DualGroupBasis& basis, const DualVisitor& visit) {
  enumerate_dual(basis, 0, basis.size, visit);
}

void enumerate_dual(const DualGroupBasis& basis, std::uint64_t begin, std::uint64_t end, const DualVisitor& visit) {
  end = std::min(end, basis.size);
  if (begin >= end) return;
  const std::uint64_t n = basis.modulus;
  const std::size_t r = basis.length();
  const std::size_t g = basis.generators.size();

  std::vector<std::uint64_t> digit(g, 0);
  std::uint64_t rest = begin;
  for (std::size_t k = g; k-- > 0;) {
    digit[k] = rest % basis.orders[k];
    rest /= basis.orders[k];
  }
  CharTuple t(r, 0);
  for (std::size_t k = 0; k < g; ++k) {
    for (std::size_t i = 0; i < r; ++i) t[i] = static_cast<std::uint32_t>((t[i] + digit[k] * basis.generators[k][i]) % n);
  }

  for (std::uint64_t idx = begin;;) {
    visit(t);
    if (++idx == end) break;
    // Odometer step. A wrapping digit also adds its generator: order * gen = 0 mod n.
    for (std::size_t k = g; k-- > 0;) {
      const auto& gen = basis.generators[k];
      for (std::size_t i = 0; i < r; ++i) {
        std::uint64_t v = t[i] + gen[i];
        if (v >= n) v -= n;
        t[i] = static_cast<std::uint32_t>(v);
      }
      if (++digit[k] < basis.orders[k]) break;
      digit[k] = 0;
    }
  }
}

std::uint64_t kernel_size_d(const ExponentMatrix& m, std::uint64_t n) {
  if (n < 1) throw InvalidArgument("character modulus must be positive");
  const auto factors = modular_smith(m.matrix(), n).factors;
  std::uint64_t d = 1;
  for (auto f : factors) d = checked_umul(d, f);
  for (std::size_t k = factors.size(); k < m.vars(); ++k) d = checked_umul(d, n);
  return d;
}

std::vector<CharTuple> kernel_bruteforce(const IntMatrix& constraints, std::uint64_t n, std::uint64_t limit) {
  const std::size_t r = constraints.cols();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (__builtin_mul_overflow(total, n, &total) || total > limit) {
      throw LimitExceeded("brute-force kernel enumeration", total, limit);
    }
  }
  DualGroupBasis probe;
  probe.modulus = n;
  probe.constraints = constraints;
  std::vector<CharTuple> out;
  CharTuple t(r, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = r; i-- > 0;) {
      t[i] = static_cast<std::uint32_t>(rest % n);
      rest /= n;
    }
    if (probe.contains(t)) out.push_back(t);
  }
  return out;
}

}  // namespace monocount
