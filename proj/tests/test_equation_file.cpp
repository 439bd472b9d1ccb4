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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace monocount {
namespace {

void expect_parse_error_at(std::string_view text, std::size_t line, std::size_t column) {
  try {
    parse_equation_file(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

TEST(EquationFile, SumOfSquares) {
  const auto form = parse_equation_file("field 5\nvars 2\nterm 1 2,0\nterm 1 0,2\n");
  EXPECT_EQ(form.field().order(), 5u);
  EXPECT_EQ(form.vars(), 2u);
  EXPECT_EQ(form.terms(), 2u);
  EXPECT_EQ(form.exponents().matrix(), IntMatrix::from_rows({{2, 0}, {0, 2}}));
  EXPECT_EQ(form.coefficients()[0], FieldElement{1});
}

TEST(EquationFile, GeneratorPowerCoefficient) {
  const auto form = parse_equation_file("field 3^2\nvars 1\nterm g^1 3\n");
  EXPECT_EQ(form.field().order(), 9u);
  EXPECT_EQ(form.coefficients()[0], form.field().generator());
  EXPECT_EQ(form.exponents()(0, 0), 3);
}

TEST(EquationFile, CommentsBlankLinesAndReduction) {
  const auto form = parse_equation_file("# header\n\nfield 7\n  vars 1  # trailing\nterm 9 4\nterm -1 2\n");
  EXPECT_EQ(form.coefficients()[0], FieldElement{2});
  EXPECT_EQ(form.coefficients()[1], FieldElement{6});
}

TEST(EquationFile, Errors) {
  expect_parse_error_at("field 5\nvars 2\nterm 0 1,1\n", 3, 6);
  expect_parse_error_at("field 5\nvars 2\nterm 1 1\n", 3, 8);
  expect_parse_error_at("field 5\nvars 2\nterm 1 1,2,3\n", 3, 8);
  expect_parse_error_at("field 5\nvars 1\nterm 1 0\n", 3, 8);
  expect_parse_error_at("field 5\nvars 1\nterms 1 1\n", 3, 1);
  expect_parse_error_at("field 6\nvars 1\nterm 1 1\n", 1, 7);
  expect_parse_error_at("field 5\nfield 5\n", 2, 1);
  expect_parse_error_at("vars 1\nfield 5\n", 1, 1);
  expect_parse_error_at("field 5\nvars 1\nterm 1 x\n", 3, 8);
  expect_parse_error_at("field 5\nvars 1\n", 4, 1);
  EXPECT_THROW(parse_equation_file(""), ParseError);
}

TEST(EquationFile, ParseErrorMessageNamesLocation) {
  try {
    parse_equation_file("field 5\nvars 2\nterm 0 1,1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3, column 6"), std::string::npos) << e.what();
  }
}

TEST(EquationFile, FormatExamples) {
  const auto form = parse_equation_file("field 3^2\nvars 2\nterm g^1 3,0\nterm 2 0,3\n");
  EXPECT_EQ(format_equation_file(form), "field 3^2\nvars 2\nterm g^1 3,0\nterm 2 0,3\n");
}

TEST(EquationFile, RoundTrip) {
  std::mt19937_64 rng(8);
  for (const auto& [p, e] : oracle::suite_fields()) {
    const auto f = build_field(p, e);
    for (int trial = 0; trial < 10; ++trial) {
      const auto form = oracle::random_form(rng, f, 1 + rng() % 4, 1 + rng() % 4);
      const std::string text = format_equation_file(form);
      const auto again = parse_equation_file(text);
      EXPECT_TRUE(again == form) << text;
      EXPECT_EQ(format_equation_file(again), text);
    }
  }
}

}  // namespace
}  // namespace monocount
