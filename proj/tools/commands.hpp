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
#include <iosfwd>
#include <string>
#include <vector>

#include "monocount/counting.hpp"

namespace monocount::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitLimit = 2,
  kExitVerify = 3,
};

/// Entry point shared by main() and the tests. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Random or diagonal instance family for `bench --gen`.
///
/// Spec string: comma-separated key=value pairs.
///   q=<p or p^e>  s=<vars>  r=<terms>  maxexp=<max exponent>  n=<instances>
///   diag=<m>      (x_1^m + ... + x_s^m instead of random exponents)
struct GeneratorSpec {
  std::string field = "7";
  std::size_t vars = 2;
  std::size_t terms = 2;
  std::int64_t max_exponent = -1;  // default: q
  std::size_t instances = 1;
  std::int64_t diagonal = 0;
};

GeneratorSpec parse_generator_spec(const std::string& text);

/// Same spec and seed always give the same instances.
std::vector<MonomialForm> generate_instances(const GeneratorSpec& spec, std::uint64_t seed);

}  // namespace monocount::cli
