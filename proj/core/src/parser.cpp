#include <cctype>
#include <optional>

#include "kripkelab/error.hpp"
#include "kripkelab/formula.hpp"

namespace kripkelab {

namespace {

enum class Token { kEnd, kIdent, kTop, kBottom, kNot, kAnd, kOr, kArrow, kLParen, kRParen };

const char* describe(Token t) {
  switch (t) {
    case Token::kEnd:
      return "end of input";
    case Token::kIdent:
      return "identifier";
    case Token::kTop:
      return "'T'";
    case Token::kBottom:
      return "'F'";
    case Token::kNot:
      return "'~'";
    case Token::kAnd:
      return "'&'";
    case Token::kOr:
      return "'|'";
    case Token::kArrow:
      return "'->'";
    case Token::kLParen:
      return "'('";
    case Token::kRParen:
      return "')'";
  }
  return "token";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  Formula parse_all() {
    Formula f = parse_imp();
    if (token_ != Token::kEnd) fail(std::string("unexpected ") + describe(token_));
    return f;
  }

 private:
  // formula := imp; imp := or ("->" imp)?
  Formula parse_imp() {
    Formula left = parse_or();
    if (token_ == Token::kArrow) {
      advance();
      return Formula::Imp(std::move(left), parse_imp());
    }
    return left;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (token_ == Token::kOr) {
      advance();
      f = Formula::Or(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_neg();
    while (token_ == Token::kAnd) {
      advance();
      f = Formula::And(std::move(f), parse_neg());
    }
    return f;
  }

  Formula parse_neg() {
    if (token_ == Token::kNot) {
      advance();
      return Formula::Not(parse_neg());
    }
    return parse_atomic();
  }

  Formula parse_atomic() {
    switch (token_) {
      case Token::kTop:
        advance();
        return Formula::Top();
      case Token::kBottom:
        advance();
        return Formula::Bottom();
      case Token::kIdent: {
        Formula f = Formula::Atom(std::string(lexeme_));
        advance();
        return f;
      }
      case Token::kLParen: {
        advance();
        Formula f = parse_imp();
        if (token_ != Token::kRParen) fail(std::string("expected ')' but found ") + describe(token_));
        advance();
        return f;
      }
      default:
        fail(std::string("expected formula but found ") + describe(token_));
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message, token_pos_ + 1);
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    token_pos_ = pos_;
    if (pos_ == text_.size()) {
      token_ = Token::kEnd;
      return;
    }
    const char c = text_[pos_];
    if (ident_start(c)) {
      std::size_t end = pos_ + 1;
      while (end < text_.size() && ident_char(text_[end])) ++end;
      lexeme_ = text_.substr(pos_, end - pos_);
      pos_ = end;
      if (lexeme_ == "T") {
        token_ = Token::kTop;
      } else if (lexeme_ == "F") {
        token_ = Token::kBottom;
      } else {
        token_ = Token::kIdent;
      }
      return;
    }
    ++pos_;
    switch (c) {
      case '~':
        token_ = Token::kNot;
        return;
      case '&':
        token_ = Token::kAnd;
        return;
      case '|':
        token_ = Token::kOr;
        return;
      case '(':
        token_ = Token::kLParen;
        return;
      case ')':
        token_ = Token::kRParen;
        return;
      case '-':
        if (pos_ < text_.size() && text_[pos_] == '>') {
          ++pos_;
          token_ = Token::kArrow;
          return;
        }
        throw SyntaxError("expected '->'", token_pos_ + 1);
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", token_pos_ + 1);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t token_pos_ = 0;
  Token token_ = Token::kEnd;
  std::string_view lexeme_;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace kripkelab
