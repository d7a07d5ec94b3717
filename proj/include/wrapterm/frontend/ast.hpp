// Abstract syntax of the input language: a small C subset over fixed-width
// machine integers.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wrapterm/logic/bitvec.hpp"

namespace wrapterm::frontend {

struct Loc {
  int line = 1;
  int col = 1;
};

struct Type {
  unsigned width = 32;
  bool is_signed = true;
  bool is_void = false;
  /// Result of a comparison or logical operator; converts to int where an
  /// integer is expected.
  bool is_bool = false;

  static Type void_type() { return {0, false, true, false}; }
  static Type bool_type() { return {1, false, false, true}; }
  friend bool operator==(const Type&, const Type&) = default;
};

std::string type_name(const Type& t);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

enum class ExprKind { Lit, Var, Unary, Binary, Ternary, Call, Nondet, Cast };

struct Expr {
  ExprKind kind;
  Loc loc;
  Type type;             // filled by the type checker
  bool typed = false;    // literal/nondet without a context type yet
  std::string name;      // Var, Call
  std::string op;        // Unary, Binary
  u128 value = 0;        // Lit
  std::vector<ExprPtr> args;

  ExprPtr clone() const;
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

enum class StmtKind { Decl, Assign, Call, If, While, Return, Assume, Assert, Block, Skip };

struct Stmt {
  StmtKind kind;
  Loc loc;
  std::string name;        // Decl / Assign target; Call: optional target
  std::string op = "=";    // Assign before normalization: =, +=, ..., ++, --
  Type type;               // Decl
  ExprPtr expr;            // Decl init, Assign rhs, If/While cond, Return value, Assume/Assert, Call expr
  std::vector<StmtPtr> body;   // Block, While body, If then-branch
  std::vector<StmtPtr> els;    // If else-branch
  int site = -1;           // Call: per-caller site index after normalization

  StmtPtr clone() const;
};

struct Param {
  std::string name;
  Type type;
};

struct Procedure {
  std::string name;
  Loc loc;
  Type ret;
  std::vector<Param> params;
  std::vector<StmtPtr> body;
  int num_sites = 0;
};

struct Global {
  std::string name;
  Type type;
  ExprPtr init;  // may be null (nondet)
  Loc loc;
};

struct Program {
  std::vector<Procedure> procedures;  // source order
  std::vector<Global> globals;
  std::string entry;
  std::map<std::string, unsigned> type_widths;

  const Procedure* find(const std::string& name) const;
  Procedure* find(const std::string& name);
};

class FrontendError : public std::runtime_error {
 public:
  FrontendError(Loc loc, const std::string& msg)
      : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.col) + ": " + msg), loc(loc) {}
  Loc loc;
};

struct Widths {
  unsigned char_w = 8;
  unsigned short_w = 16;
  unsigned int_w = 32;
  unsigned long_w = 64;
};

struct ParseOptions {
  Widths widths;
  std::string entry;  // empty: main, else the last procedure nobody calls
};

/// Parse, type-check and normalize. Throws FrontendError.
Program parse(const std::string& source, const ParseOptions& opts = {});

/// Callees before callers; ties broken by source order.
std::vector<std::string> build_call_graph(const Program& p);

/// Source text in the input syntax, parseable again.
std::string pretty_print(const Program& p);
std::string pretty_print(const Expr& e);

}  // namespace wrapterm::frontend
