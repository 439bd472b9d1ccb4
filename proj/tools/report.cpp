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

#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace monocount::cli {

namespace {

std::string printf_string(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

}  // namespace

std::string format_real(double v) {
  if (std::abs(v) < 1e-9) v = 0.0;
  return printf_string("%.12g", v);
}

std::string format_report_text(const MonomialForm& form, const CountReport& report, bool explain) {
  std::string out;
  const auto line = [&](const std::string& key, const std::string& value) { out += key + " " + value + "\n"; };
  line("field", form.field().spec());
  line("vars", std::to_string(form.vars()));
  line("terms", std::to_string(form.terms()));
  line("n_bar", std::to_string(report.n_bar));
  if (report.has_total) line("n_total", std::to_string(report.n_total));
  line("char_sum_re", format_real(report.char_sum.real()));
  line("char_sum_im", format_real(report.char_sum.imag()));
  line("residual", printf_string("%.2e", report.residual));
  if (explain) {
    line("d", std::to_string(report.sizes.d));
    line("dual_size", std::to_string(report.sizes.dual_size));
    line("dual_star_size", std::to_string(report.sizes.dual_star_size));
    std::string factors;
    for (auto f : report.invariant_factors) factors += (factors.empty() ? "" : " ") + std::to_string(f);
    line("invariant_factors", factors);
  }
  for (const auto& [phase, seconds] : report.timings) line("timing_" + phase, printf_string("%.6f", seconds));
  return out;
}

std::string format_report_json(const CountReport& report) {
  nlohmann::ordered_json j;
  j["n_bar"] = report.n_bar;
  j["n_total"] = report.n_total;
  j["d"] = report.sizes.d;
  j["dual_size"] = report.sizes.dual_size;
  j["dual_star_size"] = report.sizes.dual_star_size;
  // Same rounding as the text report, so the noise digits stay out of the output.
  j["char_sum_re"] = std::stod(format_real(report.char_sum.real()));
  j["char_sum_im"] = std::stod(format_real(report.char_sum.imag()));
  j["residual"] = report.residual;
  nlohmann::ordered_json timings = nlohmann::ordered_json::object();
  for (const auto& [phase, seconds] : report.timings) timings[phase] = seconds;
  j["timings"] = timings;
  return j.dump(2) + "\n";
}

}  // namespace monocount::cli
