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

#include <string>

#include "monocount/counting.hpp"

namespace monocount::cli {

/// Flat "key value" lines. Timing lines start with "timing_".
std::string format_report_text(const MonomialForm& form, const CountReport& report, bool explain);

/// JSON object with fields n_bar, n_total, d, dual_size, dual_star_size,
/// char_sum_re, char_sum_im, residual, timings.
std::string format_report_json(const CountReport& report);

/// %.12g, with magnitudes below 1e-9 printed as 0.
std::string format_real(double v);

}  // namespace monocount::cli
