#pragma once

#include "sandwich/expr.hpp"
#include "sandwich/table.hpp"

#include <string_view>

namespace sandwich {

/// Grammar (whitespace insignificant):
///
///   input  := expr [ "@a=" ["-"] NUMBER ]
///   expr   := term (("+" | "-") term)*
///   term   := factor ("*" factor)*
///   factor := "-" factor | NUMBER | "x" "^" "-" NUMBER | "alt" "(" "x" ")"
///           | "inv" "(" expr ")" | "table" "(" IDENT ")" | "(" expr ")"
///   NUMBER := digits ["." digits] [("e"|"E") ["+"|"-"] digits] | digits "/" digits
///
/// `a - b` builds Sum(a, Scale(-1, b)). Leaves sit on tail 1 unless the
/// `@a=` suffix says otherwise. Tables are looked up through `tables`;
/// without a resolver any `table(...)` is an UnknownTable error.
Expr parse(std::string_view text, const TableResolver& tables = {});

}  // namespace sandwich
