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
#include <string_view>

#include "monocount/counting.hpp"

namespace monocount {

// Line-oriented equation format:
//
//   # comment
//   field 3^2
//   vars 2
//   term g^1 3,0
//   term 2 0,3
//
// `field` and `vars` come first, each exactly once; one `term` per monomial.
// A coefficient is g^k (power of the field's generator) or an integer reduced
// into the prime field. Exponents list one non-negative integer per variable.

/// Throws ParseError with the 1-based line and column of the offending token.
MonomialForm parse_equation_file(std::string_view text);

/// Canonical text; parse_equation_file(format_equation_file(f)) == f.
std::string format_equation_file(const MonomialForm& form);

}  // namespace monocount
