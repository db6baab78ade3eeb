#pragma once

#include "sandwich/scalar.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace sandwich {

class TableFunction;

enum class Direction { Increasing, Decreasing, Constant };

std::string_view direction_name(Direction d) noexcept;

enum class Kind { Const, PowTail, Alt, Sum, Prod, Recip, Scale, Table };

/// Immutable expression tree for a real function of one variable on a tail
/// (tail_start, inf). Nodes are shared; copies are cheap.
///
/// The factory functions apply the canonical constant folding:
///   Const*e and e*Const      -> Scale
///   Scale(K, Const(c))       -> Const(K c)
///   Scale(K, PowTail(K', c)) -> PowTail(K K', c)   (Const(0) when K == 0)
///   Scale(K, Scale(K', e))   -> Scale(K K', e)
///   Scale(1, e)              -> e
class Expr {
 public:
  static Expr constant(Rational k, Rational tail = 1);
  /// k * x^(-c); requires k != 0 and c > 0.
  static Expr pow_tail(Rational k, Rational c, Rational tail = 1);
  /// alt(x) = +1 if floor(x) is even, -1 otherwise.
  static Expr alt(Rational tail = 1);
  static Expr table(std::shared_ptr<const TableFunction> fn, Rational tail);
  static Expr table(std::shared_ptr<const TableFunction> fn);
  static Expr sum(const Expr& lhs, const Expr& rhs);
  static Expr prod(const Expr& lhs, const Expr& rhs);
  static Expr recip(const Expr& inner);
  static Expr scale(Rational k, const Expr& inner);

  Kind kind() const noexcept;
  /// K of Const, PowTail and Scale nodes.
  const Rational& coeff() const;
  /// c of PowTail nodes.
  const Rational& exponent() const;
  const Expr& lhs() const;
  const Expr& rhs() const;
  /// Operand of Recip and Scale nodes.
  const Expr& inner() const;
  const TableFunction& table_function() const;
  const std::shared_ptr<const TableFunction>& table_ptr() const;
  const Rational& tail_start() const noexcept;

  /// Rebuilds the tree with every leaf on tail `a` (tables keep the larger
  /// of `a` and their declared tail).
  Expr with_tail_start(const Rational& a) const;
  /// Same tree with the root tail raised to max(tail_start(), a).
  Expr lifted(const Rational& a) const;

  std::size_t size() const;
  std::size_t depth() const;

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(Node node);

  std::shared_ptr<const Node> node_;
};

/// Canonical text that parses back to a structurally equal tree.
std::string print(const Expr& e);

}  // namespace sandwich
