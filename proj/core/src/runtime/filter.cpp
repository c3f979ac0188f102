// Copyright 2026 The plan-x Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "planx/runtime/filter.hpp"

#include <cctype>
#include <charconv>

namespace planx::runtime {
namespace {

struct Token {
  enum class Kind { Word, String, Number, Bool, Op, LBracket, RBracket, LParen, RParen, Amp, End };
  Kind kind = Kind::End;
  std::string text;
  Table::Cell literal;
};

class Tokenizer {
 public:
  explicit Tokenizer(const std::string& text) : text_(text) {}

  ParseResult<std::vector<Token>> run() {
    ParseResult<std::vector<Token>> result;
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < text_.size()) {
      char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c == '[') { tokens.push_back({Token::Kind::LBracket, "["}); ++i; continue; }
      if (c == ']') { tokens.push_back({Token::Kind::RBracket, "]"}); ++i; continue; }
      if (c == '(') { tokens.push_back({Token::Kind::LParen, "("}); ++i; continue; }
      if (c == ')') { tokens.push_back({Token::Kind::RParen, ")"}); ++i; continue; }
      if (c == '&') { tokens.push_back({Token::Kind::Amp, "&"}); ++i; continue; }
      if (c == '\'' || c == '"') {
        char quote = c;
        std::string value;
        ++i;
        while (i < text_.size() && text_[i] != quote) {
          value.push_back(text_[i]);
          ++i;
        }
        if (i >= text_.size()) {
          result.diagnostics.push_back({"", 0, 0, "unterminated string in query"});
          return result;
        }
        ++i;
        Token tok{Token::Kind::String, value};
        tok.literal = value;
        tokens.push_back(std::move(tok));
        continue;
      }
      if (c == '=' || c == '!' || c == '<' || c == '>') {
        std::string op(1, c);
        if (i + 1 < text_.size() && text_[i + 1] == '=') {
          op.push_back('=');
          ++i;
        }
        ++i;
        if (op == "=") {
          result.diagnostics.push_back({"", 0, 0, "'=' is not a comparison; use '=='"});
          return result;
        }
        tokens.push_back({Token::Kind::Op, op});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) ||
          (c == '-' && i + 1 < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[i + 1])))) {
        size_t start = i;
        ++i;
        bool is_float = false;
        while (i < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[i])) ||
                text_[i] == '.')) {
          if (text_[i] == '.') is_float = true;
          ++i;
        }
        std::string word = text_.substr(start, i - start);
        Token tok{Token::Kind::Number, word};
        if (is_float) {
          tok.literal = std::stod(word);
        } else {
          std::int64_t n = 0;
          std::from_chars(word.data(), word.data() + word.size(), n);
          tok.literal = n;
        }
        tokens.push_back(std::move(tok));
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t start = i;
        while (i < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[i])) ||
                text_[i] == '_'))
          ++i;
        std::string word = text_.substr(start, i - start);
        Token tok{Token::Kind::Word, word};
        if (word == "True" || word == "true") {
          tok.kind = Token::Kind::Bool;
          tok.literal = true;
        } else if (word == "False" || word == "false") {
          tok.kind = Token::Kind::Bool;
          tok.literal = false;
        }
        tokens.push_back(std::move(tok));
        continue;
      }
      result.diagnostics.push_back(
          {"", 0, 0, std::string("unexpected character '") + c + "' in query"});
      return result;
    }
    tokens.push_back({Token::Kind::End, ""});
    result.value = std::move(tokens);
    return result;
  }

 private:
  const std::string& text_;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diags)
      : tokens_(std::move(tokens)), diags_(diags) {}

  // query := 'df' '[' body ']'
  std::optional<FilterQuery> parse() {
    FilterQuery query;
    if (!expect_word("df") || !expect(Token::Kind::LBracket)) return fail();
    if (peek().kind == Token::Kind::String) {
      query.projection = true;
      query.column = next().text;
      if (!expect(Token::Kind::RBracket)) return fail();
      if (peek().kind != Token::Kind::End) {
        error("trailing tokens after projection");
        return fail();
      }
      return query;
    }
    auto node = conjunction();
    if (!node) return fail();
    query.root = std::move(*node);
    if (!expect(Token::Kind::RBracket)) return fail();
    if (peek().kind != Token::Kind::End) {
      error("trailing tokens after filter");
      return fail();
    }
    return query;
  }

 private:
  // conjunction := clause ('&' clause)*
  std::optional<FilterQuery::Node> conjunction() {
    auto first = clause();
    if (!first) return std::nullopt;
    if (peek().kind != Token::Kind::Amp) return first;
    FilterQuery::Node node;
    node.children.push_back(std::move(*first));
    while (peek().kind == Token::Kind::Amp) {
      next();
      auto rhs = clause();
      if (!rhs) return std::nullopt;
      node.children.push_back(std::move(*rhs));
    }
    return node;
  }

  // clause := '(' conjunction ')' | comparison
  std::optional<FilterQuery::Node> clause() {
    if (peek().kind == Token::Kind::LParen) {
      next();
      auto inner = conjunction();
      if (!inner) return std::nullopt;
      if (!expect(Token::Kind::RParen)) return std::nullopt;
      return inner;
    }
    return comparison();
  }

  // comparison := 'df' '[' string ']' op literal
  std::optional<FilterQuery::Node> comparison() {
    if (!expect_word("df") || !expect(Token::Kind::LBracket)) return std::nullopt;
    if (peek().kind != Token::Kind::String) {
      error("expected a quoted column name");
      return std::nullopt;
    }
    FilterQuery::Comparison cmp;
    cmp.column = next().text;
    if (!expect(Token::Kind::RBracket)) return std::nullopt;
    if (peek().kind != Token::Kind::Op) {
      error("expected a comparison operator");
      return std::nullopt;
    }
    cmp.op = next().text;
    const Token& lit = peek();
    if (lit.kind != Token::Kind::String && lit.kind != Token::Kind::Number &&
        lit.kind != Token::Kind::Bool) {
      error("expected a string, number or boolean literal");
      return std::nullopt;
    }
    cmp.literal = next().literal;
    FilterQuery::Node node;
    node.comparison = std::move(cmp);
    return node;
  }

  const Token& peek() { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  bool expect(Token::Kind kind) {
    if (peek().kind != kind) {
      error("unexpected token '" + peek().text + "'");
      return false;
    }
    next();
    return true;
  }

  bool expect_word(const std::string& word) {
    if (peek().kind != Token::Kind::Word || peek().text != word) {
      error("expected '" + word + "'");
      return false;
    }
    next();
    return true;
  }

  void error(const std::string& msg) { diags_.push_back({"", 0, 0, msg}); }
  std::optional<FilterQuery> fail() { return std::nullopt; }

  std::vector<Token> tokens_;
  std::vector<Diagnostic>& diags_;
  size_t pos_ = 0;
};

bool cells_comparable(const Table::Cell& a, const Table::Cell& b) {
  if (a.is_number() && b.is_number()) return true;
  return a.type() == b.type();
}

double as_number(const Table::Cell& c) { return c.get<double>(); }

bool evaluate_comparison(const FilterQuery::Comparison& cmp,
                         const Table::Cell& cell, bool& type_error) {
  const Table::Cell& lit = cmp.literal;
  if (!cells_comparable(cell, lit)) {
    type_error = true;
    return false;
  }
  if (cmp.op == "==") return cell == lit;
  if (cmp.op == "!=") return cell != lit;
  // Ordering comparisons require numbers or strings.
  if (cell.is_number()) {
    double l = as_number(cell), r = as_number(lit);
    if (cmp.op == ">") return l > r;
    if (cmp.op == ">=") return l >= r;
    if (cmp.op == "<") return l < r;
    if (cmp.op == "<=") return l <= r;
  } else if (cell.is_string()) {
    const auto& l = cell.get_ref<const std::string&>();
    const auto& r = lit.get_ref<const std::string&>();
    if (cmp.op == ">") return l > r;
    if (cmp.op == ">=") return l >= r;
    if (cmp.op == "<") return l < r;
    if (cmp.op == "<=") return l <= r;
  }
  type_error = true;
  return false;
}

}  // namespace

ParseResult<FilterQuery> FilterQuery::parse(const std::string& text) {
  ParseResult<FilterQuery> result;
  auto tokens = Tokenizer(text).run();
  if (!tokens.ok()) {
    result.diagnostics = std::move(tokens.diagnostics);
    return result;
  }
  Parser parser(std::move(*tokens), result.diagnostics);
  auto query = parser.parse();
  if (!query) {
    if (result.diagnostics.empty())
      result.diagnostics.push_back({"", 0, 0, "malformed query"});
    return result;
  }
  result.value = std::move(*query);
  return result;
}

ParseResult<Table> apply_query(const Table& table, const FilterQuery& query) {
  ParseResult<Table> result;

  if (query.projection) {
    auto index = table.column_index(query.column);
    if (!index) {
      result.diagnostics.push_back(
          {"", 0, 0, "unknown column '" + query.column + "'"});
      return result;
    }
    Table out;
    out.columns = {query.column};
    for (const auto& row : table.rows)
      out.rows.push_back({*index < row.size() ? row[*index] : Table::Cell{}});
    result.value = std::move(out);
    return result;
  }

  // Resolve column indices once, depth-first.
  struct Check {
    const FilterQuery::Comparison* cmp;
    size_t column;
  };
  std::vector<Check> checks;
  std::vector<const FilterQuery::Node*> stack{&query.root};
  while (!stack.empty()) {
    const FilterQuery::Node* node = stack.back();
    stack.pop_back();
    if (node->comparison) {
      auto index = table.column_index(node->comparison->column);
      if (!index) {
        result.diagnostics.push_back(
            {"", 0, 0, "unknown column '" + node->comparison->column + "'"});
        return result;
      }
      checks.push_back({&*node->comparison, *index});
    }
    for (const auto& child : node->children) stack.push_back(&child);
  }

  Table out;
  out.columns = table.columns;
  bool type_error = false;
  for (const auto& row : table.rows) {
    bool keep = true;
    for (const Check& check : checks) {
      const Table::Cell& cell =
          check.column < row.size() ? row[check.column] : Table::Cell{};
      if (!evaluate_comparison(*check.cmp, cell, type_error)) {
        keep = false;
        break;
      }
    }
    if (type_error) {
      result.diagnostics.push_back(
          {"", 0, 0, "cell type does not match the query literal"});
      return result;
    }
    if (keep) out.rows.push_back(row);
  }
  result.value = std::move(out);
  return result;
}

}  // namespace planx::runtime
