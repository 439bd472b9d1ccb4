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

#include "monocount/finite_field.hpp"

#include <charconv>
#include <limits>

#include "monocount/errors.hpp"

namespace monocount {

namespace {

constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

// Coefficients of the v-th vector in lexicographic order of (c_0, ..., c_{len-1}):
// c_0 is the most significant digit of v in base p.
std::vector<std::uint32_t> lex_coeffs(std::uint64_t v, std::uint32_t p, std::uint32_t len) {
  std::vector<std::uint32_t> c(len, 0);
  for (std::uint32_t i = len; i-- > 0;) {
    c[i] = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
  return c;
}

// Remainder of f modulo a monic g, coefficients low-degree first.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> f, const std::vector<std::uint32_t>& g,
                                    std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t k = f.size(); k-- > dg;) {
    const std::uint64_t c = f[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = (c * g[i]) % p;
      f[k - dg + i] = static_cast<std::uint32_t>((f[k - dg + i] + p - sub) % p);
    }
  }
  f.resize(dg);
  return f;
}

bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::uint32_t e = static_cast<std::uint32_t>(f.size() - 1);
  // Any factorization has a monic factor of degree <= e/2.
  for (std::uint32_t k = 1; k <= e / 2; ++k) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      auto g = lex_coeffs(v, p, k);
      g.push_back(1);
      const auto r = poly_rem(f, g, p);
      bool zero = true;
      for (auto c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw InvalidArgument("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw InvalidArgument("field order " + std::to_string(p) + "^" + std::to_string(e) +
                            " exceeds the supported maximum " + std::to_string(kMaxOrder));
    }
  }
  q_ = static_cast<std::uint32_t>(q);

  std::uint64_t candidates = q;  // p^e choices for the non-leading coefficients
  for (std::uint64_t v = 0; v < candidates; ++v) {
    auto f = lex_coeffs(v, p, e);
    f.push_back(1);
    if (is_irreducible(f, p)) {
      modulus_ = std::move(f);
      break;
    }
  }
  if (modulus_.empty()) throw InvalidArgument("no irreducible polynomial found");  // unreachable

  for (std::uint64_t v = 1; v < q; ++v) {
    const auto c = lex_coeffs(v, p, e);
    if (has_full_order(c)) {
      generator_ = from_coeffs(c);
      break;
    }
  }

  const std::uint32_t n = q_ - 1;
  antilog_.resize(n);
  log_.assign(q_, kNoLog);
  std::vector<std::uint32_t> cur(e_, 0);
  cur[0] = 1;
  const auto g = coeffs(generator_);
  for (std::uint32_t k = 0; k < n; ++k) {
    const auto idx = from_coeffs(cur).index();
    antilog_[k] = idx;
    log_[idx] = k;
    cur = poly_mulmod(cur, g);
  }

  // Trace is F_p-linear: tabulate it on the power basis, then extend.
  std::vector<std::uint32_t> basis_trace(e_, 0);
  for (std::uint32_t i = 0; i < e_; ++i) {
    std::vector<std::uint32_t> basis(e_, 0);
    basis[i] = 1;
    std::vector<std::uint32_t> acc(e_, 0);
    std::vector<std::uint32_t> frob = basis;
    for (std::uint32_t k = 0; k < e_; ++k) {
      for (std::uint32_t j = 0; j < e_; ++j) acc[j] = (acc[j] + frob[j]) % p_;
      frob = poly_powmod(frob, p_);
    }
    basis_trace[i] = acc[0];
  }
  trace_.resize(q_);
  for (std::uint32_t x = 0; x < q_; ++x) {
    std::uint64_t t = 0;
    std::uint32_t rest = x;
    for (std::uint32_t i = 0; i < e_; ++i) {
      t += static_cast<std::uint64_t>(rest % p_) * basis_trace[i];
      rest /= p_;
    }
    trace_[x] = static_cast<std::uint32_t>(t % p_);
  }
}

std::vector<std::uint32_t> FieldCtx::poly_mulmod(std::span<const std::uint32_t> a,
                                                 std::span<const std::uint32_t> b) const {
  std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < e_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_);
    }
  }
  if (e_ == 1) return prod;
  return poly_rem(std::move(prod), modulus_, p_);
}

std::vector<std::uint32_t> FieldCtx::poly_powmod(std::span<const std::uint32_t> a, std::uint64_t k) const {
  std::vector<std::uint32_t> result(e_, 0);
  result[0] = 1;
  std::vector<std::uint32_t> base(a.begin(), a.end());
  while (k > 0) {
    if (k & 1) result = poly_mulmod(result, base);
    base = poly_mulmod(base, base);
    k >>= 1;
  }
  return result;
}

bool FieldCtx::has_full_order(std::span<const std::uint32_t> a) const {
  const std::uint64_t n = q_ - 1;
  const auto is_one = [](const std::vector<std::uint32_t>& v) {
    if (v[0] != 1) return false;
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i] != 0) return false;
    }
    return true;
  };
  if (!is_one(poly_powmod(a, n))) return false;  // also rejects zero
  for (auto ell : prime_factors(n)) {
    if (is_one(poly_powmod(a, n / ell))) return false;
  }
  return true;
}

FieldElement FieldCtx::from_int(std::int64_t value) const {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return FieldElement{static_cast<std::uint32_t>(r)};
}

FieldElement FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != e_) throw InvalidArgument("coefficient vector length must equal the degree");
  std::uint32_t idx = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw InvalidArgument("coefficient not reduced mod p");
    idx = idx * p_ + coeffs[i];
  }
  return FieldElement{idx};
}

std::vector<std::uint32_t> FieldCtx::coeffs(FieldElement x) const {
  std::vector<std::uint32_t> c(e_);
  std::uint32_t rest = x.index();
  for (std::uint32_t i = 0; i < e_; ++i) {
    c[i] = rest % p_;
    rest /= p_;
  }
  return c;
}

FieldElement FieldCtx::add(FieldElement x, FieldElement y) const {
  if (e_ == 1) return FieldElement{(x.index() + y.index()) % p_};
  if (p_ == 2) return FieldElement{x.index() ^ y.index()};
  std::uint32_t a = x.index(), b = y.index(), out = 0, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return FieldElement{out};
}

FieldElement FieldCtx::neg(FieldElement x) const {
  if (p_ == 2) return x;
  if (e_ == 1) return FieldElement{(p_ - x.index()) % p_};
  std::uint32_t a = x.index(), out = 0, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return FieldElement{out};
}

FieldElement FieldCtx::sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }

FieldElement FieldCtx::mul(FieldElement x, FieldElement y) const {
  if (x.is_zero() || y.is_zero()) return zero();
  const std::uint32_t n = q_ - 1;
  return FieldElement{antilog_[(log_[x.index()] + log_[y.index()]) % n]};
}

FieldElement FieldCtx::inv(FieldElement x) const {
  if (x.is_zero()) throw InvalidArgument("inverse of zero");
  const std::uint32_t n = q_ - 1;
  return FieldElement{antilog_[(n - log_[x.index()]) % n]};
}

FieldElement FieldCtx::pow(FieldElement x, std::int64_t k) const {
  if (x.is_zero()) {
    if (k == 0) return one();
    if (k > 0) return zero();
    throw InvalidArgument("negative power of zero");
  }
  const std::int64_t n = q_ - 1;
  std::int64_t kr = k % n;
  if (kr < 0) kr += n;
  const std::uint64_t e = (static_cast<std::uint64_t>(log_[x.index()]) * static_cast<std::uint64_t>(kr)) % n;
  return FieldElement{antilog_[e]};
}

FieldElement FieldCtx::mul_poly(FieldElement x, FieldElement y) const {
  return from_coeffs(poly_mulmod(coeffs(x), coeffs(y)));
}

std::uint32_t FieldCtx::discrete_log(FieldElement x) const {
  if (x.is_zero()) throw InvalidArgument("discrete log of zero");
  return log_[x.index()];
}

std::string FieldCtx::spec() const {
  if (e_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "^" + std::to_string(e_);
}

FieldPtr build_field(std::uint32_t p, std::uint32_t e) { return std::make_shared<const FieldCtx>(p, e); }

FieldPtr parse_field_spec(const std::string& text) {
  const auto parse_uint = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc{} || ptr != end || v > std::numeric_limits<std::uint32_t>::max()) {
      throw InvalidArgument("malformed field specification '" + text + "'");
    }
    return static_cast<std::uint32_t>(v);
  };
  const std::string_view view{text};
  const auto caret = view.find('^');
  if (caret == std::string_view::npos) return build_field(parse_uint(view), 1);
  return build_field(parse_uint(view.substr(0, caret)), parse_uint(view.substr(caret + 1)));
}

}  // namespace monocount
