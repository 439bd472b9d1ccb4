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

#include "monocount/equation_file.hpp"

#include <charconv>
#include <optional>
#include <vector>

#include "monocount/errors.hpp"

namespace monocount {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_line(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::optional<std::int64_t> to_int(std::string_view s) {
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MonomialForm run() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      const std::size_t nl = text_.find('\n', pos);
      std::string_view line = text_.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      handle(line_no, split_line(line));
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    const std::size_t end_line = line_no + 1;
    if (!field_) throw ParseError(end_line, 1, "missing 'field' line");
    if (vars_ == 0) throw ParseError(end_line, 1, "missing 'vars' line");
    if (coeffs_.empty()) throw ParseError(end_line, 1, "no 'term' lines");

    IntMatrix m(vars_, coeffs_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      for (std::size_t j = 0; j < vars_; ++j) m(j, i) = exps_[i][j];
    }
    return MonomialForm(field_, ExponentMatrix{std::move(m)}, coeffs_);
  }

 private:
  void handle(std::size_t line, const std::vector<Token>& tokens) {
    if (tokens.empty()) return;
    const Token& key = tokens[0];
    const auto expect_args = [&](std::size_t count) {
      if (tokens.size() < count + 1) {
        throw ParseError(line, key.column + key.text.size(), "'" + std::string(key.text) + "' expects " +
                                                                 std::to_string(count) + " argument(s)");
      }
      if (tokens.size() > count + 1) throw ParseError(line, tokens[count + 1].column, "unexpected token");
    };

    if (key.text == "field") {
      expect_args(1);
      if (field_) throw ParseError(line, key.column, "duplicate 'field' line");
      try {
        field_ = parse_field_spec(std::string(tokens[1].text));
      } catch (const InvalidArgument& e) {
        throw ParseError(line, tokens[1].column, e.what());
      }
    } else if (key.text == "vars") {
      expect_args(1);
      if (vars_ != 0) throw ParseError(line, key.column, "duplicate 'vars' line");
      if (!field_) throw ParseError(line, key.column, "'vars' before 'field'");
      const auto v = to_int(tokens[1].text);
      if (!v || *v < 1) throw ParseError(line, tokens[1].column, "variable count must be a positive integer");
      vars_ = static_cast<std::size_t>(*v);
    } else if (key.text == "term") {
      expect_args(2);
      if (!field_ || vars_ == 0) throw ParseError(line, key.column, "'term' before 'field' and 'vars'");
      coeffs_.push_back(parse_coefficient(line, tokens[1]));
      exps_.push_back(parse_exponents(line, tokens[2]));
      bool nonzero = false;
      for (auto e : exps_.back()) nonzero = nonzero || e != 0;
      if (!nonzero) throw ParseError(line, tokens[2].column, "constant term (all exponents zero)");
    } else {
      throw ParseError(line, key.column, "unknown key '" + std::string(key.text) + "'");
    }
  }

  FieldElement parse_coefficient(std::size_t line, const Token& tok) {
    FieldElement value;
    if (tok.text.starts_with("g^")) {
      const auto k = to_int(tok.text.substr(2));
      if (!k || *k < 0) throw ParseError(line, tok.column + 2, "generator exponent must be a non-negative integer");
      value = field_->antilog(static_cast<std::uint64_t>(*k));
    } else {
      const auto v = to_int(tok.text);
      if (!v) throw ParseError(line, tok.column, "coefficient must be an integer or g^k");
      value = field_->from_int(*v);
    }
    if (value.is_zero()) throw ParseError(line, tok.column, "zero coefficient");
    return value;
  }

  std::vector<std::int64_t> parse_exponents(std::size_t line, const Token& tok) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = tok.text.find(',', start);
      const auto part = tok.text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      const auto v = to_int(part);
      if (!v || *v < 0) throw ParseError(line, tok.column + start, "exponent must be a non-negative integer");
      out.push_back(*v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (out.size() != vars_) {
      throw ParseError(line, tok.column, "expected " + std::to_string(vars_) + " exponents, got " +
                                             std::to_string(out.size()));
    }
    return out;
  }

  std::string_view text_;
  FieldPtr field_;
  std::size_t vars_ = 0;
  std::vector<FieldElement> coeffs_;
  std::vector<std::vector<std::int64_t>> exps_;
};

}  // namespace

MonomialForm parse_equation_file(std::string_view text) { return Parser{text}.run(); }

std::string format_equation_file(const MonomialForm& form) {
  const FieldCtx& f = form.field();
  std::string out = "field " + f.spec() + "\nvars " + std::to_string(form.vars()) + "\n";
  for (std::size_t i = 0; i < form.terms(); ++i) {
    const FieldElement a = form.coefficients()[i];
    out += "term ";
    out += f.is_prime_subfield(a) ? std::to_string(a.index()) : "g^" + std::to_string(f.discrete_log(a));
    out += ' ';
    for (std::size_t j = 0; j < form.vars(); ++j) {
      if (j) out += ',';
      out += std::to_string(form.exponents()(j, i));
    }
    out += '\n';
  }
  return out;
}

}  // namespace monocount
