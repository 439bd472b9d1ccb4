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

#include "monocount/counting.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "monocount/errors.hpp"

namespace monocount {

namespace {

// Enumerations are cut into fixed-size blocks whose partial results are
// combined in block order, so the floating-point result is the same for any
// thread count.
constexpr std::uint64_t kBlock = 4096;

template <class T, class Fn>
std::vector<T> block_partials(std::uint64_t total, unsigned threads, Fn&& fn) {
  const std::uint64_t blocks = (total + kBlock - 1) / kBlock;
  std::vector<T> partial(blocks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::uint64_t b = next.fetch_add(1);
      if (b >= blocks) return;
      try {
        partial[b] = fn(b * kBlock, std::min(total, (b + 1) * kBlock));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  const std::uint64_t workers = std::min<std::uint64_t>(std::max(1u, threads), blocks);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return partial;
}

Complex sum_in_order(const std::vector<Complex>& parts) {
  Complex total{0.0, 0.0};
  for (const auto& p : parts) total += p;
  return total;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) return UINT64_MAX;
  }
  return out;
}

void enforce_limit(const char* what, std::uint64_t required, const CountOptions& opts) {
  if (!opts.force && required > opts.limit) throw LimitExceeded(what, required, opts.limit);
}

bool agrees(Complex a, Complex b) { return std::abs(a - b) <= 1e-6 * std::max(1.0, std::abs(b)); }

// Walks x in (K^0)^s in discrete-log coordinates x_j = g^{u_j}, last variable
// fastest, keeping logs[i] = offset_i + sum_j m_ji u_j (mod q-1) current.
// Every step on digit j (increment or wrap) adds row j of M: a wrap moves u_j
// by -(q-2), which is +1 mod q-1.
class UnitWalker {
 public:
  UnitWalker(const MonomialForm& form, std::span<const std::uint32_t> offsets, std::uint64_t start)
      : n_(form.field().unit_order()), s_(form.vars()), r_(form.terms()), digits_(s_), logs_(offsets.begin(), offsets.end()) {
    rows_.resize(s_ * r_);
    for (std::size_t j = 0; j < s_; ++j) {
      for (std::size_t i = 0; i < r_; ++i) {
        rows_[j * r_ + i] = static_cast<std::uint32_t>(form.exponents()(j, i) % n_);
      }
    }
    for (std::size_t j = s_; j-- > 0;) {
      digits_[j] = start % n_;
      start /= n_;
    }
    for (std::size_t j = 0; j < s_; ++j) {
      for (std::size_t i = 0; i < r_; ++i) {
        logs_[i] = static_cast<std::uint32_t>((logs_[i] + digits_[j] * rows_[j * r_ + i]) % n_);
      }
    }
  }

  std::span<const std::uint32_t> logs() const { return logs_; }
  std::span<const std::uint64_t> digits() const { return digits_; }

  void step() {
    for (std::size_t j = s_; j-- > 0;) {
      const std::uint32_t* row = &rows_[j * r_];
      for (std::size_t i = 0; i < r_; ++i) {
        std::uint64_t v = logs_[i] + row[i];
        if (v >= n_) v -= n_;
        logs_[i] = static_cast<std::uint32_t>(v);
      }
      if (++digits_[j] < n_) return;
      digits_[j] = 0;
    }
  }

 private:
  std::uint64_t n_;
  std::size_t s_;
  std::size_t r_;
  std::vector<std::uint64_t> digits_;
  std::vector<std::uint32_t> logs_;
  std::vector<std::uint32_t> rows_;
};

std::vector<std::uint32_t> coefficient_logs(const MonomialForm& form, std::uint32_t shift = 0) {
  const FieldCtx& f = form.field();
  std::vector<std::uint32_t> out;
  for (auto a : form.coefficients()) out.push_back((f.discrete_log(a) + shift) % f.unit_order());
  return out;
}

FieldElement sum_of_antilogs(const FieldCtx& f, std::span<const std::uint32_t> logs) {
  const auto antilog = f.antilog_table();
  FieldElement acc = f.zero();
  for (auto l : logs) acc = f.add(acc, FieldElement{antilog[l]});
  return acc;
}

// Exponents t in [0, q-1) that can occur as a component of some group element:
// component i ranges over the multiples of gcd(q-1, generator components).
std::vector<std::uint32_t> component_exponents(const DualGroupBasis& basis) {
  const std::uint64_t n = basis.modulus;
  std::vector<unsigned char> mark(n, 0);
  for (std::size_t i = 0; i < basis.length(); ++i) {
    std::uint64_t h = n;
    for (const auto& gen : basis.generators) h = std::gcd(h, static_cast<std::uint64_t>(gen[i]));
    for (std::uint64_t t = 0; t < n; t += h) mark[t] = 1;
  }
  std::vector<std::uint32_t> out;
  for (std::uint64_t t = 0; t < n; ++t) {
    if (mark[t]) out.push_back(static_cast<std::uint32_t>(t));
  }
  return out;
}

// sum over chi in the group of chi(a)^{-1 or +1} * prod_i g(chi_i)
Complex character_sum(const MonomialForm& form, const CharacterTable& table, const DualGroupBasis& basis,
                      const GaussSumCache& gauss, bool conjugate, unsigned threads) {
  const std::uint64_t n = basis.modulus;
  const auto log_a = coefficient_logs(form);
  const auto parts = block_partials<Complex>(basis.size, threads, [&](std::uint64_t begin, std::uint64_t end) {
    Complex acc{0.0, 0.0};
    enumerate_dual(basis, begin, end, [&](std::span<const std::uint32_t> t) {
      std::uint64_t e = 0;
      Complex prod{1.0, 0.0};
      for (std::size_t i = 0; i < t.size(); ++i) {
        e = (e + static_cast<std::uint64_t>(t[i]) * log_a[i]) % n;
        prod *= gauss[t[i]];
      }
      acc += (conjugate ? table.unit_root(n - e) : table.unit_root(e)) * prod;
    });
    return acc;
  });
  return sum_in_order(parts);
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct NBarEvaluation {
  std::uint64_t n_bar = 0;
  Complex char_sum;
  double residual = 0.0;
  double tolerance = 0.0;
  GroupSizes sizes;
  std::vector<std::int64_t> invariant_factors;
  double lattice_seconds = 0.0;
  double gauss_seconds = 0.0;
  double sum_seconds = 0.0;
};

NBarEvaluation evaluate_n_bar(const MonomialForm& form, const CharacterTable& table, const CountOptions& opts) {
  using clock = std::chrono::steady_clock;
  const FieldCtx& f = form.field();
  const std::uint64_t n = f.unit_order();
  const double q = f.order();
  const auto s = static_cast<double>(form.vars());
  const auto r = static_cast<double>(form.terms());
  NBarEvaluation out;

  auto start = clock::now();
  const auto dual = dual_group(form.exponents(), n);
  const auto star = restrict_lambda_trivial(dual);
  out.sizes = {kernel_size_d(form.exponents(), n), dual.size, star.size};
  out.invariant_factors = dual.invariant_factors;
  out.lattice_seconds = elapsed_since(start);
  enforce_limit("character sum over the lambda-trivial dual group", star.size, opts);

  start = clock::now();
  const GaussSumCache gauss(table, AdditiveChar::base(), component_exponents(star));
  out.gauss_seconds = elapsed_since(start);

  start = clock::now();
  out.char_sum = character_sum(form, table, star, gauss, /*conjugate=*/true, opts.threads);
  out.sum_seconds = elapsed_since(start);

  const double dn = static_cast<double>(n);
  const double points = std::pow(dn, s);
  const Complex raw = (points + std::pow(dn, s - r + 1.0) * out.char_sum) / q;
  const double rounded = std::nearbyint(raw.real());
  out.residual = std::abs(raw - Complex{rounded, 0.0});
  out.tolerance = rounding_tolerance(form);
  if (!(out.residual < out.tolerance) || !(std::abs(out.char_sum.imag()) < out.tolerance)) {
    std::ostringstream msg;
    msg << "character-sum count is not integral: raw value (" << raw.real() << ", " << raw.imag()
        << "), residual " << out.residual << ", tolerance " << out.tolerance;
    throw VerificationFailure(msg.str());
  }
  if (rounded < 0.0 || rounded > points) {
    throw VerificationFailure("character-sum count " + std::to_string(rounded) + " outside [0, (q-1)^s]");
  }
  out.n_bar = static_cast<std::uint64_t>(rounded);
  return out;
}

std::uint64_t inclusion_exclusion(const MonomialForm& form, const CharacterTable& table, const CountOptions& opts) {
  const std::size_t s = form.vars(), r = form.terms();
  if (s >= 63) throw LimitExceeded("zero-pattern subsets", UINT64_MAX, opts.limit);
  const std::uint64_t subsets = std::uint64_t{1} << s;
  enforce_limit("zero-pattern subsets", subsets, opts);
  const std::uint64_t n = form.field().unit_order();
  const ExponentMatrix& m = form.exponents();

  std::uint64_t total = 0;
  for (std::uint64_t zeroed = 0; zeroed < subsets; ++zeroed) {
    std::vector<std::size_t> kept_vars, kept_terms;
    for (std::size_t j = 0; j < s; ++j) {
      if (!(zeroed >> j & 1)) kept_vars.push_back(j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      bool survives = true;
      for (std::size_t j = 0; j < s; ++j) survives = survives && !((zeroed >> j & 1) && m(j, i) > 0);
      if (survives) kept_terms.push_back(i);
    }
    std::uint64_t contribution;
    if (kept_terms.empty()) {
      contribution = checked_power(n, kept_vars.size());
      if (contribution == UINT64_MAX) throw LimitExceeded("solution count", contribution, opts.limit);
    } else {
      // A surviving term has no exponent on a zeroed variable, so it still has
      // a positive exponent on some kept one.
      IntMatrix sub(kept_vars.size(), kept_terms.size());
      std::vector<FieldElement> coeffs;
      for (std::size_t b = 0; b < kept_terms.size(); ++b) {
        for (std::size_t a = 0; a < kept_vars.size(); ++a) sub(a, b) = m(kept_vars[a], kept_terms[b]);
        coeffs.push_back(form.coefficients()[kept_terms[b]]);
      }
      const MonomialForm reduced(form.field_ptr(), ExponentMatrix{std::move(sub)}, std::move(coeffs));
      contribution = evaluate_n_bar(reduced, table, opts).n_bar;
    }
    if (__builtin_add_overflow(total, contribution, &total)) {
      throw LimitExceeded("solution count", UINT64_MAX, opts.limit);
    }
  }
  return total;
}

}  // namespace

MonomialForm::MonomialForm(FieldPtr field, ExponentMatrix exponents, std::vector<FieldElement> coefficients)
    : field_(std::move(field)), exponents_(std::move(exponents)), coefficients_(std::move(coefficients)) {
  if (!field_) throw InvalidArgument("monomial form needs a field");
  if (coefficients_.size() != exponents_.terms()) {
    throw InvalidArgument("expected " + std::to_string(exponents_.terms()) + " coefficients, got " +
                          std::to_string(coefficients_.size()));
  }
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i].is_zero()) throw InvalidArgument("coefficient of term " + std::to_string(i + 1) + " is zero");
    if (coefficients_[i].index() >= field_->order()) throw InvalidArgument("coefficient is not a field element");
  }
}

std::vector<std::string> MonomialForm::exponent_warnings() const {
  std::vector<std::string> out;
  const std::int64_t n = field_->unit_order();
  for (std::size_t i = 0; i < terms(); ++i) {
    for (std::size_t j = 0; j < vars(); ++j) {
      const std::int64_t m = exponents_(j, i);
      if (m > 0 && m % n == 0) {
        out.push_back("exponent " + std::to_string(m) + " of x" + std::to_string(j + 1) + " in term " +
                      std::to_string(i + 1) + " is a multiple of q-1 = " + std::to_string(n));
      }
    }
  }
  return out;
}

bool operator==(const MonomialForm& a, const MonomialForm& b) {
  return a.field_->characteristic() == b.field_->characteristic() && a.field_->degree() == b.field_->degree() &&
         a.exponents_ == b.exponents_ && a.coefficients_ == b.coefficients_;
}

double rounding_tolerance(const MonomialForm& form) {
  const double n = form.field().unit_order();
  return 1e-6 * std::max(1.0, std::pow(n, static_cast<double>(form.vars()) / 2.0));
}

FieldElement eval_form(const MonomialForm& form, std::span<const FieldElement> x) {
  if (x.size() != form.vars()) throw InvalidArgument("point has wrong number of coordinates");
  const FieldCtx& f = form.field();
  FieldElement acc = f.zero();
  for (std::size_t i = 0; i < form.terms(); ++i) {
    FieldElement term = form.coefficients()[i];
    for (std::size_t j = 0; j < form.vars(); ++j) term = f.mul(term, f.pow(x[j], form.exponents()(j, i)));
    acc = f.add(acc, term);
  }
  return acc;
}

Complex s_bar_direct(const MonomialForm& form, AdditiveChar psi, const CountOptions& opts) {
  const FieldCtx& f = form.field();
  const std::uint64_t points = checked_power(f.unit_order(), form.vars());
  enforce_limit("enumeration of (K^0)^s", points, opts);
  const CharacterTable table(form.field_ptr());
  // psi_u(sum a_i y_i) = psi_0(sum (u a_i) y_i)
  const auto offsets = coefficient_logs(form, f.discrete_log(psi.scale()));
  const auto parts = block_partials<Complex>(points, opts.threads, [&](std::uint64_t begin, std::uint64_t end) {
    UnitWalker walk(form, offsets, begin);
    Complex acc{0.0, 0.0};
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      acc += table.prime_root(f.trace(sum_of_antilogs(f, walk.logs())));
      walk.step();
    }
    return acc;
  });
  return sum_in_order(parts);
}

Complex s_bar_via_characters(const MonomialForm& form, AdditiveChar psi, const CountOptions& opts) {
  const FieldCtx& f = form.field();
  const std::uint64_t n = f.unit_order();
  const CharacterTable table(form.field_ptr());
  const auto dual = dual_group(form.exponents(), n);
  enforce_limit("character sum over the dual group", dual.size, opts);
  const GaussSumCache gauss(table, psi, component_exponents(dual));
  const Complex sum = character_sum(form, table, dual, gauss, /*conjugate=*/true, opts.threads);
  const double scale = std::pow(static_cast<double>(n), static_cast<double>(form.vars()) - static_cast<double>(form.terms()));
  return scale * sum;
}

Complex s_bar_via_image(const MonomialForm& form, AdditiveChar psi, const CountOptions& opts) {
  const FieldCtx& f = form.field();
  const std::uint64_t points = checked_power(f.unit_order(), form.vars());
  enforce_limit("enumeration of (K^0)^s", points, opts);
  const CharacterTable table(form.field_ptr());
  const std::vector<std::uint32_t> no_offset(form.terms(), 0);
  std::set<std::vector<std::uint32_t>> image;
  UnitWalker walk(form, no_offset, 0);
  for (std::uint64_t idx = 0; idx < points; ++idx) {
    image.emplace(walk.logs().begin(), walk.logs().end());
    walk.step();
  }
  const auto log_a = coefficient_logs(form, f.discrete_log(psi.scale()));
  std::vector<std::uint32_t> shifted(form.terms());
  Complex sum{0.0, 0.0};
  for (const auto& y : image) {
    for (std::size_t i = 0; i < y.size(); ++i) shifted[i] = (y[i] + log_a[i]) % f.unit_order();
    sum += table.prime_root(f.trace(sum_of_antilogs(f, shifted)));
  }
  return static_cast<double>(kernel_size_d(form.exponents(), f.unit_order())) * sum;
}

CountReport n_bar_formula(const MonomialForm& form, const CountOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const CharacterTable table(form.field_ptr());
  const auto eval = evaluate_n_bar(form, table, opts);

  CountReport report;
  report.n_bar = eval.n_bar;
  report.char_sum = eval.char_sum;
  report.residual = eval.residual;
  report.tolerance = eval.tolerance;
  report.sizes = eval.sizes;
  report.invariant_factors = eval.invariant_factors;
  report.warnings = form.exponent_warnings();
  report.timings = {{"lattice", eval.lattice_seconds},
                    {"gauss_sums", eval.gauss_seconds},
                    {"character_sum", eval.sum_seconds}};
  if (opts.with_total) {
    const auto total_start = std::chrono::steady_clock::now();
    report.n_total = inclusion_exclusion(form, table, opts);
    report.has_total = true;
    report.timings.emplace_back("total_count", elapsed_since(total_start));
  }
  report.timings.emplace_back("overall", elapsed_since(start));
  return report;
}

std::uint64_t n_bar_bruteforce(const MonomialForm& form, const CountOptions& opts) {
  const FieldCtx& f = form.field();
  const std::uint64_t points = checked_power(f.unit_order(), form.vars());
  enforce_limit("enumeration of (K^0)^s", points, opts);
  const auto offsets = coefficient_logs(form);
  const auto parts = block_partials<std::uint64_t>(points, opts.threads, [&](std::uint64_t begin, std::uint64_t end) {
    UnitWalker walk(form, offsets, begin);
    std::uint64_t count = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      count += sum_of_antilogs(f, walk.logs()).is_zero();
      walk.step();
    }
    return count;
  });
  return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

std::uint64_t n_total_inclusion_exclusion(const MonomialForm& form, const CountOptions& opts) {
  const CharacterTable table(form.field_ptr());
  return inclusion_exclusion(form, table, opts);
}

std::uint64_t n_total_bruteforce(const MonomialForm& form, const CountOptions& opts) {
  const FieldCtx& f = form.field();
  const std::uint64_t q = f.order();
  const std::uint64_t points = checked_power(q, form.vars());
  enforce_limit("enumeration of K^s", points, opts);
  const auto parts = block_partials<std::uint64_t>(points, opts.threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<FieldElement> x(form.vars());
    std::uint64_t count = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t j = x.size(); j-- > 0;) {
        x[j] = FieldElement{static_cast<std::uint32_t>(rest % q)};
        rest /= q;
      }
      count += eval_form(form, x).is_zero();
    }
    return count;
  });
  return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

PsiSumCheck sum_over_psi_check(const MonomialForm& form, const CountOptions& opts) {
  const FieldCtx& f = form.field();
  const std::uint64_t n = f.unit_order();
  const double s = static_cast<double>(form.vars());
  const double r = static_cast<double>(form.terms());
  PsiSumCheck out;

  for (std::uint64_t k = 0; k < n; ++k) out.direct += s_bar_direct(form, AdditiveChar{f.antilog(k)}, opts);

  const double points = std::pow(static_cast<double>(n), s);
  out.from_count = static_cast<double>(f.order()) * static_cast<double>(n_bar_bruteforce(form, opts)) - points;

  const CharacterTable table(form.field_ptr());
  const auto star = restrict_lambda_trivial(dual_group(form.exponents(), n));
  enforce_limit("character sum over the lambda-trivial dual group", star.size, opts);
  const GaussSumCache gauss(table, AdditiveChar::base(), component_exponents(star));
  const double scale = std::pow(static_cast<double>(n), s - r + 1.0);
  out.character_side = scale * character_sum(form, table, star, gauss, true, opts.threads);
  out.character_side_unconjugated = scale * character_sum(form, table, star, gauss, false, opts.threads);
  out.unconjugated_agrees = agrees(out.character_side_unconjugated, Complex{out.from_count, 0.0});

  const Complex expected{out.from_count, 0.0};
  if (!agrees(out.direct, expected) || !agrees(out.character_side, expected)) {
    std::ostringstream msg;
    msg << "sum over additive characters disagrees: direct (" << out.direct.real() << ", " << out.direct.imag()
        << "), q*N_bar-(q-1)^s " << out.from_count << ", character side (" << out.character_side.real() << ", "
        << out.character_side.imag() << ")";
    throw VerificationFailure(msg.str());
  }
  return out;
}

}  // namespace monocount
