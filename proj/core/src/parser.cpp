#include "sandwich/parser.hpp"

#include "sandwich/error.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

namespace sandwich {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const TableResolver& tables) : text_(text), tables_(tables) {}

  Expr run() {
    Expr e = expr();
    Rational tail = 1;
    skip_space();
    if (peek() == '@') {
      ++pos_;
      expect_literal("a");
      expect_literal("=");
      skip_space();
      bool negative = false;
      if (peek() == '-') {
        negative = true;
        ++pos_;
      }
      tail = number();
      if (negative) tail = -tail;
    }
    skip_space();
    if (pos_ != text_.size()) fail({"+", "-", "*", "@a=", "end of input"});
    if (tail != 1 || has_table_) e = e.with_tail_start(tail);
    check_tails(e);
    return e;
  }

 private:
  Expr expr() {
    Expr acc = term();
    for (;;) {
      skip_space();
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = Expr::sum(acc, term());
      } else if (c == '-') {
        ++pos_;
        acc = Expr::sum(acc, Expr::scale(-1, term()));
      } else {
        return acc;
      }
    }
  }

  Expr term() {
    Expr acc = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') return acc;
      ++pos_;
      acc = Expr::prod(acc, factor());
    }
  }

  Expr factor() {
    skip_space();
    char c = peek();
    if (c == '-') {
      ++pos_;
      return Expr::scale(-1, factor());
    }
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      expect_literal(")");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return Expr::constant(number());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      std::string word = ident();
      if (word == "x") {
        expect_literal("^");
        expect_literal("-");
        skip_space();
        std::size_t number_at = pos_;
        Rational exponent = number();
        if (exponent <= 0) {
          throw Error(ErrorCode::NonPositiveExponent,
                      "x^-c requires c > 0 at position " + std::to_string(number_at));
        }
        return Expr::pow_tail(1, exponent);
      }
      if (word == "alt") {
        expect_literal("(");
        expect_literal("x");
        expect_literal(")");
        return Expr::alt();
      }
      if (word == "inv") {
        expect_literal("(");
        Expr inner = expr();
        expect_literal(")");
        return Expr::recip(inner);
      }
      if (word == "table") {
        expect_literal("(");
        skip_space();
        std::size_t id_at = pos_;
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail({"IDENT"});
        std::string id = ident();
        expect_literal(")");
        std::shared_ptr<const TableFunction> fn = tables_ ? tables_(id) : nullptr;
        if (!fn) {
          throw Error(ErrorCode::UnknownTable,
                      "unknown table '" + id + "' at position " + std::to_string(id_at));
        }
        has_table_ = true;
        return Expr::table(std::move(fn));
      }
      pos_ = at;
      fail({"NUMBER", "x", "alt", "inv", "table", "(", "-"});
    }
    fail({"NUMBER", "x", "alt", "inv", "table", "(", "-"});
  }

  Rational number() {
    skip_space();
    std::size_t start = pos_;
    auto digits = [&] {
      std::size_t from = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return pos_ > from;
    };
    bool whole = digits();
    if (peek() == '/' && whole) {
      ++pos_;
      if (!digits()) fail({"digits"});
    } else {
      bool frac = false;
      if (peek() == '.') {
        ++pos_;
        frac = digits();
      }
      if (!whole && !frac) {
        pos_ = start;
        fail({"NUMBER"});
      }
      if (peek() == 'e' || peek() == 'E') {
        std::size_t mark = pos_;
        ++pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        if (!digits()) pos_ = mark;
      }
    }
    auto value = Scalar::parse_rational(text_.substr(start, pos_ - start));
    if (!value) {
      pos_ = start;
      fail({"NUMBER"});
    }
    return *value;
  }

  std::string ident() {
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect_literal(std::string_view lit) {
    skip_space();
    if (text_.substr(pos_, lit.size()) != lit) fail({std::string(lit)});
    pos_ += lit.size();
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "at position " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += "'" + expected[i] + "'";
    }
    msg += pos_ < text_.size() ? ", found '" + std::string(1, text_[pos_]) + "'" : ", found end of input";
    throw ParseError(pos_, std::move(expected), msg);
  }

  static void check_tails(const Expr& e) {
    switch (e.kind()) {
      case Kind::PowTail:
        if (e.tail_start() < 0)
          throw Error(ErrorCode::InvalidTailStart, "x^-c needs a tail start >= 0, got " + rational_literal(e.tail_start()));
        return;
      case Kind::Sum:
      case Kind::Prod:
        check_tails(e.lhs());
        check_tails(e.rhs());
        return;
      case Kind::Recip:
      case Kind::Scale:
        check_tails(e.inner());
        return;
      default:
        return;
    }
  }

  std::string_view text_;
  const TableResolver& tables_;
  std::size_t pos_ = 0;
  bool has_table_ = false;
};

}  // namespace

Expr parse(std::string_view text, const TableResolver& tables) {
  return Parser(text, tables).run();
}

}  // namespace sandwich
