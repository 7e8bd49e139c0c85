#pragma once

#include <map>
#include <string>
#include <vector>

#include "cotwist/report.hpp"

namespace cotwist {

/// Wiring expressions: composition chains of tensor products of named
/// generators. Grammar (ASCII):
///   expr := term ("o" term)*      -- composition, rightmost factor first
///   term := atom ("x" atom)*      -- tensor product
///   atom := NAME | "(" expr ")"
///   NAME := [A-Za-z_][A-Za-z0-9_.]* optionally followed by "[...]"
struct Expr {
  enum class Kind { Compose, Tensor, Gen };
  Kind kind = Kind::Gen;
  std::vector<Expr> children;
  std::string name;  // Gen only
};

Expr parse_expr(const std::string& src);  // throws ParseError with byte offset
std::string pretty(const Expr& e);

struct Env {
  std::map<std::string, LinMap> table;
  std::map<std::string, Space> spaces;  // registry used to materialize id/swap

  void bind(const std::string& name, LinMap m);
  void bind_space(const std::string& name, const Space& s);

  /// Adds id[X] for every registered space and swap[X,Y] for every ordered
  /// pair. Explicit bindings win.
  void finalize();

  const LinMap& lookup(const std::string& name) const;  // throws UnknownGenerator
};

LinMap elaborate(const Expr& e, const Env& env);
LinMap elaborate(const std::string& src, const Env& env);

/// Pass iff both sides elaborate to exactly equal matrices.
CheckReport check_equation(const std::string& lhs, const std::string& rhs, const Env& env,
                           const std::string& name = "");

struct EquationLine {
  std::string lhs, rhs;
  int lineno = 0;
};

/// "LHS == RHS" per line; '#' starts a comment; blank lines ignored.
std::vector<EquationLine> parse_equation_file(const std::string& content);

CheckReport check_equation_file(const std::string& content, const Env& env);

}  // namespace cotwist
