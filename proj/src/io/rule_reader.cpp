#include "cftgen/io/rule_reader.hpp"

#include <cctype>
#include <set>

#include "cftgen/errors.hpp"

namespace cftgen::io {

namespace {

struct Token {
  enum class Type { Word, Punct, End };
  Type type = Type::End;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& current() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_blanks();
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.type = Token::Type::End;
      current_.text.clear();
      return;
    }
    const char c = text_[pos_];
    if (is_word_char(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_word_char(text_[pos_])) bump();
      current_.type = Token::Type::Word;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (std::string_view("{}().=;,").find(c) != std::string_view::npos) {
      current_.type = Token::Type::Punct;
      current_.text = std::string(1, c);
      bump();
      return;
    }
    throw SyntaxError("unexpected character '" + std::string(1, c) + "'", line_, column_);
  }

  // Hyphen is part of failure-type names, so it counts as a word character.
  static bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-';
  }

  void skip_blanks() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        bump();
      } else {
        return;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) {}

  RuleLibrary parse() {
    RuleLibrary lib;
    while (lexer_.current().type != Token::Type::End) {
      const Token t = expect_word("'block' or 'connector_type'");
      if (t.text == "connector_type") {
        parse_connector_type(lib);
      } else if (t.text == "block") {
        parse_block(lib);
      } else {
        throw SyntaxError("expected 'block' or 'connector_type', got '" + t.text + "'", t.line,
                          t.column);
      }
    }
    return lib;
  }

 private:
  Token expect_word(const std::string& what) {
    if (lexer_.current().type != Token::Type::Word) {
      throw SyntaxError("expected " + what, lexer_.current().line, lexer_.current().column);
    }
    return lexer_.take();
  }

  Token expect_punct(char c) {
    if (lexer_.current().type != Token::Type::Punct || lexer_.current().text[0] != c) {
      throw SyntaxError("expected '" + std::string(1, c) + "'", lexer_.current().line,
                        lexer_.current().column);
    }
    return lexer_.take();
  }

  bool at_punct(char c) const {
    return lexer_.current().type == Token::Type::Punct && lexer_.current().text[0] == c;
  }

  bool at_word(std::string_view word) const {
    return lexer_.current().type == Token::Type::Word && lexer_.current().text == word;
  }

  static void check_name(const Token& t) {
    if (t.text.find('-') != std::string::npos) {
      throw SyntaxError("'" + t.text + "' is not a valid identifier ([A-Za-z0-9_])", t.line,
                        t.column);
    }
  }

  FailureType failure_type(const Token& t) {
    if (auto fty = parse_failure_type(t.text)) return *fty;
    throw SchemaError("unknown failure type '" + t.text + "'", t.line, t.column);
  }

  void parse_connector_type(RuleLibrary& lib) {
    const Token name = expect_word("a connector-type name");
    check_name(name);
    if (at_punct('{')) {
      expect_punct('{');
      FailureTypeSet set;
      while (true) {
        set.insert(failure_type(expect_word("a failure type")));
        if (at_punct(',')) {
          expect_punct(',');
          continue;
        }
        break;
      }
      expect_punct('}');
      declare(lib, name, set);
      return;
    }
    const Token category = expect_word("a category (boolean, numeric, time)");
    if (category.text == "boolean") {
      declare(lib, name, ConnectorTypeTable::category_failure_types(TypeCategory::Boolean));
    } else if (category.text == "numeric") {
      declare(lib, name, ConnectorTypeTable::category_failure_types(TypeCategory::Numeric));
    } else if (category.text == "time") {
      declare(lib, name, ConnectorTypeTable::category_failure_types(TypeCategory::Time));
    } else {
      throw SchemaError("unknown category '" + category.text +
                            "', expected boolean, numeric or time",
                        category.line, category.column);
    }
  }

  static void declare(RuleLibrary& lib, const Token& name, FailureTypeSet set) {
    try {
      lib.connector_types.declare(name.text, set);
    } catch (const SchemaError& e) {
      throw SchemaError(e.what(), name.line, name.column);
    }
  }

  void parse_block(RuleLibrary& lib) {
    const Token name = expect_word("a block-type name");
    check_name(name);
    if (lib.rule_sets.count(name.text) != 0) {
      throw SchemaError("duplicate block type '" + name.text + "'", name.line, name.column);
    }
    RuleSet rs;
    rs.block_type = name.text;
    expect_punct('{');
    while (!at_punct('}')) {
      parse_rule(rs);
    }
    expect_punct('}');
    lib.rule_sets.emplace(rs.block_type, std::move(rs));
  }

  void parse_rule(RuleSet& rs) {
    const Token out = expect_word("an output parameter name");
    check_name(out);
    expect_punct('.');
    const Token fty_token = expect_word("a failure type");
    const FailureType fty = failure_type(fty_token);
    expect_punct('=');
    RuleExpr expr = parse_expr();
    expect_punct(';');
    const RuleKey key{out.text, fty};
    if (rs.rules.count(key) != 0) {
      throw DuplicateRuleKeyError("duplicate rule for '" + out.text + "." +
                                      std::string(to_string(fty)) + "' in block '" +
                                      rs.block_type + "'",
                                  out.line, out.column);
    }
    rs.rules.emplace(key, std::move(expr));
  }

  // expr := and_expr ((OR | XOR) and_expr)*
  RuleExpr parse_expr() {
    RuleExpr lhs = parse_and();
    while (at_word("OR") || at_word("XOR")) {
      const bool exclusive = lexer_.take().text == "XOR";
      RuleExpr rhs = parse_and();
      if (exclusive) {
        lhs = RuleExpr::exclusive_or(std::move(lhs), std::move(rhs));
      } else {
        std::vector<RuleExpr> ops;
        ops.push_back(std::move(lhs));
        ops.push_back(std::move(rhs));
        lhs = RuleExpr::disjunction(std::move(ops));
      }
    }
    return lhs;
  }

  RuleExpr parse_and() {
    RuleExpr lhs = parse_unary();
    while (at_word("AND")) {
      lexer_.take();
      RuleExpr rhs = parse_unary();
      std::vector<RuleExpr> ops;
      ops.push_back(std::move(lhs));
      ops.push_back(std::move(rhs));
      lhs = RuleExpr::conjunction(std::move(ops));
    }
    return lhs;
  }

  RuleExpr parse_unary() {
    if (at_word("NOT")) {
      lexer_.take();
      return RuleExpr::negation(parse_unary());
    }
    if (at_punct('(')) {
      expect_punct('(');
      RuleExpr inner = parse_expr();
      expect_punct(')');
      return inner;
    }
    const Token param = expect_word("an input term");
    check_name(param);
    expect_punct('.');
    const Token fty_token = expect_word("a failure type");
    return RuleExpr::term(param.text, failure_type(fty_token));
  }

  Lexer lexer_;
};

}  // namespace

RuleLibrary parse_rule_library(std::string_view text) {
  return Parser(text).parse();
}

}  // namespace cftgen::io
