#include "sandwich/expr.hpp"

#include "sandwich/error.hpp"
#include "sandwich/table.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace sandwich {

std::string_view direction_name(Direction d) noexcept {
  switch (d) {
    case Direction::Increasing: return "increasing";
    case Direction::Decreasing: return "decreasing";
    case Direction::Constant: return "constant";
  }
  return "constant";
}

struct Expr::Node {
  Kind kind = Kind::Const;
  Rational k{0};
  Rational c{0};
  Rational tail{1};
  std::vector<Expr> kids;
  std::shared_ptr<const TableFunction> table;
};

Expr Expr::make(Node node) { return Expr(std::make_shared<const Node>(std::move(node))); }

Expr Expr::constant(Rational k, Rational tail) {
  Node n;
  n.kind = Kind::Const;
  n.k = std::move(k);
  n.tail = std::move(tail);
  return make(std::move(n));
}

Expr Expr::pow_tail(Rational k, Rational c, Rational tail) {
  if (c <= 0) throw Error(ErrorCode::NonPositiveExponent, "x^-c requires c > 0, got c = " + rational_literal(c));
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "K*x^-c requires K != 0");
  Node n;
  n.kind = Kind::PowTail;
  n.k = std::move(k);
  n.c = std::move(c);
  n.tail = std::move(tail);
  return make(std::move(n));
}

Expr Expr::alt(Rational tail) {
  Node n;
  n.kind = Kind::Alt;
  n.tail = std::move(tail);
  return make(std::move(n));
}

Expr Expr::table(std::shared_ptr<const TableFunction> fn, Rational tail) {
  if (!fn) throw Error(ErrorCode::UnknownTable, "null table");
  Node n;
  n.kind = Kind::Table;
  n.tail = std::max(tail, fn->tail_start());
  n.table = std::move(fn);
  return make(std::move(n));
}

Expr Expr::table(std::shared_ptr<const TableFunction> fn) {
  if (!fn) throw Error(ErrorCode::UnknownTable, "null table");
  Rational tail = fn->tail_start();
  return table(std::move(fn), std::move(tail));
}

Expr Expr::sum(const Expr& lhs, const Expr& rhs) {
  Node n;
  n.kind = Kind::Sum;
  n.kids = {lhs, rhs};
  n.tail = std::max(lhs.tail_start(), rhs.tail_start());
  return make(std::move(n));
}

Expr Expr::prod(const Expr& lhs, const Expr& rhs) {
  if (lhs.kind() == Kind::Const) return scale(lhs.coeff(), rhs).lifted(lhs.tail_start());
  if (rhs.kind() == Kind::Const) return scale(rhs.coeff(), lhs).lifted(rhs.tail_start());
  Node n;
  n.kind = Kind::Prod;
  n.kids = {lhs, rhs};
  n.tail = std::max(lhs.tail_start(), rhs.tail_start());
  return make(std::move(n));
}

Expr Expr::recip(const Expr& inner) {
  Node n;
  n.kind = Kind::Recip;
  n.kids = {inner};
  n.tail = inner.tail_start();
  return make(std::move(n));
}

Expr Expr::scale(Rational k, const Expr& inner) {
  switch (inner.kind()) {
    case Kind::Const:
      return constant(k * inner.coeff(), inner.tail_start());
    case Kind::PowTail:
      if (k == 0) return constant(0, inner.tail_start());
      return pow_tail(k * inner.coeff(), inner.exponent(), inner.tail_start());
    case Kind::Scale:
      return scale(k * inner.coeff(), inner.inner()).lifted(inner.tail_start());
    default:
      break;
  }
  if (k == 1) return inner;
  Node n;
  n.kind = Kind::Scale;
  n.k = std::move(k);
  n.kids = {inner};
  n.tail = inner.tail_start();
  return make(std::move(n));
}

Kind Expr::kind() const noexcept { return node_->kind; }

const Rational& Expr::coeff() const {
  if (kind() != Kind::Const && kind() != Kind::PowTail && kind() != Kind::Scale)
    throw Error(ErrorCode::InvalidArgument, "node has no coefficient");
  return node_->k;
}

const Rational& Expr::exponent() const {
  if (kind() != Kind::PowTail) throw Error(ErrorCode::InvalidArgument, "node has no exponent");
  return node_->c;
}

const Expr& Expr::lhs() const {
  if (kind() != Kind::Sum && kind() != Kind::Prod) throw Error(ErrorCode::InvalidArgument, "node has no operands");
  return node_->kids[0];
}

const Expr& Expr::rhs() const {
  if (kind() != Kind::Sum && kind() != Kind::Prod) throw Error(ErrorCode::InvalidArgument, "node has no operands");
  return node_->kids[1];
}

const Expr& Expr::inner() const {
  if (kind() != Kind::Recip && kind() != Kind::Scale) throw Error(ErrorCode::InvalidArgument, "node has no operand");
  return node_->kids[0];
}

const TableFunction& Expr::table_function() const { return *table_ptr(); }

const std::shared_ptr<const TableFunction>& Expr::table_ptr() const {
  if (kind() != Kind::Table) throw Error(ErrorCode::InvalidArgument, "node is not a table");
  return node_->table;
}

const Rational& Expr::tail_start() const noexcept { return node_->tail; }

Expr Expr::with_tail_start(const Rational& a) const {
  switch (kind()) {
    case Kind::Const: return constant(coeff(), a);
    case Kind::PowTail: return pow_tail(coeff(), exponent(), a);
    case Kind::Alt: return alt(a);
    case Kind::Table: return table(table_ptr(), a);
    case Kind::Sum: return sum(lhs().with_tail_start(a), rhs().with_tail_start(a));
    case Kind::Prod: return prod(lhs().with_tail_start(a), rhs().with_tail_start(a));
    case Kind::Recip: return recip(inner().with_tail_start(a));
    case Kind::Scale: return scale(coeff(), inner().with_tail_start(a));
  }
  return *this;
}

Expr Expr::lifted(const Rational& a) const {
  if (a <= tail_start()) return *this;
  Node n = *node_;
  n.tail = a;
  return make(std::move(n));
}

std::size_t Expr::size() const {
  switch (kind()) {
    case Kind::Sum:
    case Kind::Prod: return 1 + lhs().size() + rhs().size();
    case Kind::Recip:
    case Kind::Scale: return 1 + inner().size();
    default: return 1;
  }
}

std::size_t Expr::depth() const {
  switch (kind()) {
    case Kind::Sum:
    case Kind::Prod: return 1 + std::max(lhs().depth(), rhs().depth());
    case Kind::Recip:
    case Kind::Scale: return 1 + inner().depth();
    default: return 1;
  }
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.tail_start() != b.tail_start()) return false;
  switch (a.kind()) {
    case Kind::Const: return a.coeff() == b.coeff();
    case Kind::PowTail: return a.coeff() == b.coeff() && a.exponent() == b.exponent();
    case Kind::Alt: return true;
    case Kind::Table: return a.table_function().id() == b.table_function().id();
    case Kind::Sum:
    case Kind::Prod: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Kind::Recip: return a.inner() == b.inner();
    case Kind::Scale: return a.coeff() == b.coeff() && a.inner() == b.inner();
  }
  return false;
}

namespace {

// -e for subtrahend printing, when e carries a visible negative sign.
std::optional<Expr> negated(const Expr& e) {
  switch (e.kind()) {
    case Kind::Const:
      if (e.coeff() < 0) return Expr::constant(-e.coeff(), e.tail_start());
      break;
    case Kind::PowTail:
      if (e.coeff() < 0) return Expr::pow_tail(-e.coeff(), e.exponent(), e.tail_start());
      break;
    case Kind::Scale:
      if (e.coeff() == -1) return e.inner();
      if (e.coeff() < 0) return Expr::scale(-e.coeff(), e.inner());
      break;
    default:
      break;
  }
  return std::nullopt;
}

// Precedence levels: 1 sum, 2 product-like, 3 atom.
std::string print_at(const Expr& e, int context) {
  std::string s;
  int level = 3;
  switch (e.kind()) {
    case Kind::Const:
      s = rational_literal(e.coeff());
      break;
    case Kind::PowTail: {
      std::string power = "x^-" + rational_literal(e.exponent());
      if (e.coeff() == 1) {
        s = power;
      } else if (e.coeff() == -1) {
        s = "-" + power;
      } else {
        s = rational_literal(e.coeff()) + "*" + power;
        level = 2;
      }
      break;
    }
    case Kind::Alt:
      s = "alt(x)";
      break;
    case Kind::Table:
      s = "table(" + e.table_function().id() + ")";
      break;
    case Kind::Recip:
      s = "inv(" + print_at(e.inner(), 0) + ")";
      break;
    case Kind::Sum:
      if (auto n = negated(e.rhs()))
        s = print_at(e.lhs(), 1) + " - " + print_at(*n, 2);
      else
        s = print_at(e.lhs(), 1) + " + " + print_at(e.rhs(), 2);
      level = 1;
      break;
    case Kind::Prod:
      s = print_at(e.lhs(), 2) + "*" + print_at(e.rhs(), 3);
      level = 2;
      break;
    case Kind::Scale:
      if (e.coeff() == -1) {
        s = "-" + print_at(e.inner(), 3);
      } else {
        s = rational_literal(e.coeff()) + "*" + print_at(e.inner(), 3);
        level = 2;
      }
      break;
  }
  if (level < context) return "(" + s + ")";
  return s;
}

}  // namespace

std::string print(const Expr& e) {
  std::string s = print_at(e, 0);
  if (e.tail_start() != 1) s += " @a=" + rational_literal(e.tail_start());
  return s;
}

}  // namespace sandwich
