#include <cctype>

#include "toto/error.hpp"
#include "toto/formula.hpp"

namespace toto {
namespace {

struct Token {
  enum Type { Open, Close, Symbol, End } type;
  std::string_view text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == text_.size()) return {Token::End, {}, pos_};
    const std::size_t start = pos_;
    if (text_[pos_] == '(') return {Token::Open, text_.substr(pos_++, 1), start};
    if (text_[pos_] == ')') return {Token::Close, text_.substr(pos_++, 1), start};
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')')
      ++pos_;
    return {Token::Symbol, text_.substr(start, pos_ - start), start};
  }

  Token peek() {
    const std::size_t saved = pos_;
    Token t = next();
    pos_ = saved;
    return t;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_variable(std::string_view s) {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  for (char c : s)
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))) return false;
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) {}

  Formula parse_top() {
    Formula f = parse();
    const Token t = lexer_.next();
    if (t.type != Token::End) throw ParseError("trailing input", t.offset);
    return f;
  }

 private:
  Formula parse() {
    const Token open = lexer_.next();
    if (open.type != Token::Open) throw ParseError("expected '('", open.offset);
    const Token head = lexer_.next();
    if (head.type != Token::Symbol) throw ParseError("expected operator", head.offset);
    const std::string_view op = head.text;

    Formula result = [&]() -> Formula {
      if (op == "=" || op == "<p" || op == "<v") {
        const Relation r = op == "=" ? Relation::Equal : op == "<p" ? Relation::LessPosition : Relation::LessValue;
        std::string a = variable();
        std::string b = variable();
        return Formula::atom(r, std::move(a), std::move(b));
      }
      if (op == "E" || op == "A") {
        std::string v = variable();
        Formula body = parse();
        return op == "E" ? Formula::exists(std::move(v), std::move(body))
                         : Formula::forall(std::move(v), std::move(body));
      }
      if (op == "not") return Formula::negation(parse());
      if (op == "imp" || op == "iff") {
        Formula a = parse();
        Formula b = parse();
        return op == "imp" ? Formula::implies(std::move(a), std::move(b)) : Formula::iff(std::move(a), std::move(b));
      }
      if (op == "and" || op == "or") {
        std::vector<Formula> operands;
        while (lexer_.peek().type == Token::Open) operands.push_back(parse());
        if (operands.empty()) throw ParseError("'" + std::string(op) + "' needs at least one operand", head.offset);
        return op == "and" ? Formula::conjunction(std::move(operands)) : Formula::disjunction(std::move(operands));
      }
      throw ParseError("unknown operator '" + std::string(op) + "'", head.offset);
    }();

    const Token close = lexer_.next();
    if (close.type != Token::Close) throw ParseError("expected ')'", close.offset);
    return result;
  }

  std::string variable() {
    const Token t = lexer_.next();
    if (t.type != Token::Symbol || !is_variable(t.text)) throw ParseError("expected variable name", t.offset);
    return std::string(t.text);
  }

  Lexer lexer_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse_top(); }

Formula parse_sentence(std::string_view text) {
  Formula f = parse_formula(text);
  const auto free = free_variables(f);
  if (!free.empty()) throw UnboundVariable(*free.begin());
  return f;
}

}  // namespace toto
