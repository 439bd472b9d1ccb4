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

#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "monocount/equation_file.hpp"
#include "monocount/errors.hpp"
#include "report.hpp"

namespace monocount::cli {

namespace {

struct CountArgs {
  std::string file;
  bool verify = false;
  bool explain = false;
  bool json = false;
  bool force = false;
  std::uint64_t limit = 10'000'000;
  unsigned threads = 1;
};

struct BenchArgs {
  std::string file;
  std::string gen;
  std::uint64_t seed = 1;
  std::uint64_t limit = 100'000'000;
  bool force = false;
  unsigned threads = 1;
};

struct GaussArgs {
  std::string field;
  std::string scale = "1";
};

bool read_text(const std::string& path, std::string& text) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

// Parses and reports errors; returns nullopt after printing a diagnostic.
std::optional<MonomialForm> load_form(const std::string& path, std::ostream& err) {
  std::string text;
  if (!read_text(path, text)) {
    err << "monocount: cannot read '" << path << "'\n";
    return std::nullopt;
  }
  try {
    return parse_equation_file(text);
  } catch (const ParseError& e) {
    err << path << ": " << e.what() << "\n";
  } catch (const InvalidArgument& e) {
    err << path << ": " << e.what() << "\n";
  }
  return std::nullopt;
}

void report_limit(const LimitExceeded& e, std::ostream& err) {
  err << "monocount: limit exceeded: " << e.what() << " (raise --limit or pass --force)\n";
}

template <class Fn>
double mean_seconds(Fn&& fn) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  std::size_t reps = 0;
  double elapsed = 0.0;
  do {
    fn();
    ++reps;
    elapsed = std::chrono::duration<double>(clock::now() - start).count();
  } while (elapsed < 0.05 && reps < 100000);
  return elapsed / static_cast<double>(reps);
}

int cmd_count(const CountArgs& args, std::ostream& out, std::ostream& err) {
  auto form = load_form(args.file, err);
  if (!form) return kExitParse;
  for (const auto& w : form->exponent_warnings()) err << "warning: " << w << "\n";

  CountOptions opts;
  opts.limit = args.limit;
  opts.force = args.force;
  opts.threads = args.threads;

  CountReport report;
  try {
    report = n_bar_formula(*form, opts);
  } catch (const LimitExceeded& e) {
    report_limit(e, err);
    return kExitLimit;
  } catch (const ArithmeticOverflow& e) {
    err << "monocount: " << e.what() << "\n";
    return kExitLimit;
  } catch (const VerificationFailure& e) {
    err << "monocount: " << e.what() << "\n";
    return kExitVerify;
  }

  out << (args.json ? format_report_json(report) : format_report_text(*form, report, args.explain));
  if (!args.verify) return kExitOk;

  std::uint64_t n_bar_bf = 0, n_total_bf = 0;
  try {
    n_bar_bf = n_bar_bruteforce(*form, opts);
    n_total_bf = n_total_bruteforce(*form, opts);
  } catch (const LimitExceeded& e) {
    report_limit(e, err);
    return kExitLimit;
  }
  const bool bar_ok = n_bar_bf == report.n_bar;
  const bool total_ok = n_total_bf == report.n_total;
  if (!args.json) {
    out << "verify_n_bar " << (bar_ok ? "ok" : "MISMATCH") << " " << n_bar_bf << "\n";
    out << "verify_n_total " << (total_ok ? "ok" : "MISMATCH") << " " << n_total_bf << "\n";
  }
  if (!bar_ok || !total_ok) {
    err << "monocount: verification failed: formula (" << report.n_bar << ", " << report.n_total
        << ") vs enumeration (" << n_bar_bf << ", " << n_total_bf << ")\n";
    return kExitVerify;
  }
  return kExitOk;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<MonomialForm> forms;
  if (!args.file.empty()) {
    auto form = load_form(args.file, err);
    if (!form) return kExitParse;
    forms.push_back(std::move(*form));
  }
  if (!args.gen.empty()) {
    try {
      for (auto& f : generate_instances(parse_generator_spec(args.gen), args.seed)) forms.push_back(std::move(f));
    } catch (const InvalidArgument& e) {
      err << "monocount: --gen: " << e.what() << "\n";
      return kExitParse;
    }
  }
  if (forms.empty()) {
    err << "monocount: bench needs an equation file or --gen\n";
    return kExitParse;
  }

  CountOptions opts;
  opts.limit = args.limit;
  opts.force = args.force;
  opts.threads = args.threads;
  opts.with_total = false;

  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const MonomialForm& form = forms[i];
    std::uint64_t by_formula = 0, by_enumeration = 0;
    double formula_s = 0.0, enumeration_s = 0.0;
    try {
      formula_s = mean_seconds([&] { by_formula = n_bar_formula(form, opts).n_bar; });
      enumeration_s = mean_seconds([&] { by_enumeration = n_bar_bruteforce(form, opts); });
    } catch (const LimitExceeded& e) {
      report_limit(e, err);
      return kExitLimit;
    } catch (const VerificationFailure& e) {
      err << "monocount: " << e.what() << "\n";
      return kExitVerify;
    }
    const bool equal = by_formula == by_enumeration;
    mismatches += !equal;
    char timing[160];
    std::snprintf(timing, sizeof timing, "formula_seconds %.3e bruteforce_seconds %.3e speedup %.1f", formula_s,
                  enumeration_s, formula_s > 0.0 ? enumeration_s / formula_s : 0.0);
    out << "instance " << i + 1 << " field " << form.field().spec() << " vars " << form.vars() << " terms "
        << form.terms() << " n_bar_formula " << by_formula << " n_bar_bruteforce " << by_enumeration << " "
        << (equal ? "equal" : "MISMATCH") << " " << timing << "\n";
  }
  out << "instances " << forms.size() << " mismatches " << mismatches << "\n";
  return mismatches == 0 ? kExitOk : kExitVerify;
}

int cmd_gauss(const GaussArgs& args, std::ostream& out, std::ostream& err) {
  FieldPtr field;
  FieldElement scale;
  try {
    field = parse_field_spec(args.field);
  } catch (const InvalidArgument& e) {
    err << "monocount: " << e.what() << "\n";
    return kExitParse;
  }
  try {
    // Reuse the equation-file coefficient syntax for the additive scale.
    const auto probe = parse_equation_file("field " + args.field + "\nvars 1\nterm " + args.scale + " 1\n");
    scale = probe.coefficients()[0];
  } catch (const ParseError&) {
    err << "monocount: --u must be a nonzero integer or g^k, got '" << args.scale << "'\n";
    return kExitParse;
  }
  const CharacterTable table(field);
  const AdditiveChar psi{scale};
  for (std::uint32_t t = 0; t < field->unit_order(); ++t) {
    const Complex g = table.gauss_sum(MultChar{t}, psi);
    out << t << '\t' << format_real(g.real()) << '\t' << format_real(g.imag()) << '\t' << format_real(std::norm(g))
        << '\n';
  }
  return kExitOk;
}

}  // namespace

GeneratorSpec parse_generator_spec(const std::string& text) {
  GeneratorSpec spec;
  std::stringstream ss(text);
  std::string item;
  const auto number = [](const std::string& key, const std::string& v) {
    try {
      std::size_t used = 0;
      const long long x = std::stoll(v, &used);
      if (used != v.size() || x < 0) throw std::invalid_argument(v);
      return static_cast<std::int64_t>(x);
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad value '" + v + "' for " + key);
    }
  };
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "q") {
      spec.field = value;
    } else if (key == "s") {
      spec.vars = static_cast<std::size_t>(number(key, value));
    } else if (key == "r") {
      spec.terms = static_cast<std::size_t>(number(key, value));
    } else if (key == "maxexp") {
      spec.max_exponent = number(key, value);
    } else if (key == "n") {
      spec.instances = static_cast<std::size_t>(number(key, value));
    } else if (key == "diag") {
      spec.diagonal = number(key, value);
    } else {
      throw InvalidArgument("unknown generator key '" + key + "'");
    }
  }
  if (spec.vars < 1 || spec.terms < 1) throw InvalidArgument("s and r must be positive");
  return spec;
}

std::vector<MonomialForm> generate_instances(const GeneratorSpec& spec, std::uint64_t seed) {
  const FieldPtr field = parse_field_spec(spec.field);
  const std::uint64_t n = field->unit_order();
  // mt19937_64 output is fixed by the standard; distributions are not, so map by modulo.
  std::mt19937_64 rng(seed);
  const auto below = [&](std::uint64_t bound) { return rng() % bound; };
  const std::int64_t max_exp = spec.max_exponent >= 1 ? spec.max_exponent : static_cast<std::int64_t>(field->order());

  std::vector<MonomialForm> out;
  for (std::size_t k = 0; k < spec.instances; ++k) {
    const std::size_t s = spec.vars;
    const std::size_t r = spec.diagonal > 0 ? s : spec.terms;
    IntMatrix m(s, r);
    std::vector<FieldElement> coeffs;
    for (std::size_t i = 0; i < r; ++i) {
      if (spec.diagonal > 0) {
        m(i, i) = spec.diagonal;
        coeffs.push_back(field->one());
        continue;
      }
      bool nonzero = false;
      for (std::size_t j = 0; j < s; ++j) {
        m(j, i) = static_cast<std::int64_t>(below(static_cast<std::uint64_t>(max_exp) + 1));
        nonzero = nonzero || m(j, i) != 0;
      }
      if (!nonzero) m(below(s), i) = 1 + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(max_exp)));
      coeffs.push_back(field->antilog(below(n)));
    }
    out.emplace_back(field, ExponentMatrix{std::move(m)}, std::move(coeffs));
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count solutions of monomial equations over finite fields with Gauss sums", "monocount"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count solutions of an equation file");
  count->add_option("file", count_args.file, "Equation file ('-' for stdin)")->required();
  count->add_flag("--verify", count_args.verify, "Cross-check against exhaustive enumeration");
  count->add_flag("--explain", count_args.explain, "Print group sizes and invariant factors");
  count->add_flag("--json", count_args.json, "Machine-readable output");
  count->add_option("--limit", count_args.limit, "Maximum enumeration size")->capture_default_str();
  count->add_flag("--force", count_args.force, "Ignore --limit");
  count->add_option("--threads", count_args.threads, "Worker threads")->check(CLI::PositiveNumber);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time the character-sum count against enumeration");
  bench->add_option("file", bench_args.file, "Equation file");
  bench->add_option("--gen", bench_args.gen, "Instance generator, e.g. q=11,s=6,diag=2 or q=7,s=3,r=3,n=5");
  bench->add_option("--seed", bench_args.seed, "Generator seed")->capture_default_str();
  bench->add_option("--limit", bench_args.limit, "Maximum enumeration size")->capture_default_str();
  bench->add_flag("--force", bench_args.force, "Ignore --limit");
  bench->add_option("--threads", bench_args.threads, "Worker threads")->check(CLI::PositiveNumber);

  GaussArgs gauss_args;
  auto* gauss = app.add_subcommand("gauss", "Tabulate Gauss sums g(chi_t, psi_u) for every t");
  gauss->add_option("field", gauss_args.field, "Field, p or p^e")->required();
  gauss->add_option("--u", gauss_args.scale, "Additive character scale u (integer or g^k)")->capture_default_str();

  std::vector<const char*> argv{"monocount"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitParse;
  }

  if (count->parsed()) return cmd_count(count_args, out, err);
  if (bench->parsed()) return cmd_bench(bench_args, out, err);
  return cmd_gauss(gauss_args, out, err);
}

}  // namespace monocount::cli
