// Quantifier-free fixed-width bit-vector terms.
//
// Terms are hash-consed DAG nodes: two structurally equal terms share the
// same node, so a Term compares and hashes by pointer. Nodes live for the
// lifetime of the process and are safe to share across threads.
#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "wrapterm/logic/bitvec.hpp"

namespace wrapterm {

enum class Op : std::uint8_t {
  Const,
  Var,
  // bitwise (Boolean when width 1)
  Not,
  And,
  Or,
  Xor,
  // arithmetic, wraps modulo 2^width
  Neg,
  Add,
  Sub,
  Mul,
  Shl,
  LShr,
  AShr,
  // comparisons, width 1
  Eq,
  Ult,
  Ule,
  Slt,
  Sle,
  Ite,
  ZExt,
  SExt,
  Extract,  // low `param` .. low+width-1
};

struct Node;

class Term {
 public:
  Term() = default;
  explicit Term(const Node* n) : node_(n) {}

  const Node* node() const { return node_; }
  bool is_null() const { return node_ == nullptr; }
  explicit operator bool() const { return node_ != nullptr; }

  Op op() const;
  unsigned width() const;
  std::size_t arity() const;
  Term operator[](std::size_t i) const;
  bool is_const() const;
  bool is_var() const;
  bool is_true() const;
  bool is_false() const;
  u128 value() const;              // Const only
  const std::string& name() const; // Var only
  bool is_signed() const;          // Var: declared signedness
  unsigned param() const;          // Extract low bit

  friend bool operator==(Term a, Term b) { return a.node_ == b.node_; }
  friend bool operator!=(Term a, Term b) { return a.node_ != b.node_; }
  friend bool operator<(Term a, Term b);

 private:
  const Node* node_ = nullptr;
};

struct Node {
  Op op;
  unsigned width;
  bool is_signed;
  unsigned param;
  u128 value;
  std::string name;
  std::vector<Term> kids;
  std::size_t hash;
  std::size_t id;  // creation order; gives a deterministic total order
};

struct TermHash {
  std::size_t operator()(Term t) const { return std::hash<const void*>()(t.node()); }
};

using Formula = Term;  // a width-1 term

class TermError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Construction. All constructors check operand widths and fold constants.
Term mk_const(unsigned width, u128 value);
Term mk_signed_const(unsigned width, i128 value);
Term mk_var(const std::string& name, unsigned width, bool is_signed = false);
Term mk_bool(bool b);
Term mk_true();
Term mk_false();

Term bv_not(Term a);
Term bv_and(Term a, Term b);
Term bv_or(Term a, Term b);
Term bv_xor(Term a, Term b);
Term bv_neg(Term a);
Term bv_add(Term a, Term b);
Term bv_sub(Term a, Term b);
Term bv_mul(Term a, Term b);
Term bv_shl(Term a, Term b);
Term bv_lshr(Term a, Term b);
Term bv_ashr(Term a, Term b);
Term mk_eq(Term a, Term b);
Term mk_ult(Term a, Term b);
Term mk_ule(Term a, Term b);
Term mk_slt(Term a, Term b);
Term mk_sle(Term a, Term b);
Term mk_ite(Term c, Term a, Term b);
Term mk_zext(Term a, unsigned width);
Term mk_sext(Term a, unsigned width);
Term mk_extract(Term a, unsigned low, unsigned width);

/// Resize to `width` (truncate, or extend by the given signedness).
Term mk_cast(Term a, unsigned width, bool source_signed);

// Boolean helpers on width-1 terms.
Formula lnot(Formula a);
Formula land(Formula a, Formula b);
Formula lor(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula conjunction(const std::vector<Formula>& fs);
Formula disjunction(const std::vector<Formula>& fs);
Term mk_ne(Term a, Term b);

/// Variable assignment by name. Values are truncated to the variable width.
using Valuation = std::unordered_map<std::string, u128>;

class UnboundVariable : public std::runtime_error {
 public:
  explicit UnboundVariable(const std::string& n) : std::runtime_error("unbound variable " + n) {}
};

u128 evaluate(Term t, const Valuation& sigma);
bool evaluate_bool(Formula f, const Valuation& sigma);

using Substitution = std::unordered_map<Term, Term, TermHash>;
Term substitute(Term t, const Substitution& s);

/// Free variables in creation order.
std::vector<Term> free_vars(Term t);
std::vector<Term> free_vars(const std::vector<Term>& ts);

/// Number of distinct DAG nodes.
std::size_t dag_size(Term t);

std::string to_string(Term t);

/// Rebuild a linear template expression (constants, variables, +, -, *, neg,
/// casts) at `extra` additional bits of signed width: variables are cast
/// exactly (zero- or sign-extended by their declared signedness) and
/// comparisons become signed comparisons at the widened width.
Term extend_width(Term t, unsigned extra);

}  // namespace wrapterm

template <>
struct std::hash<wrapterm::Term> {
  std::size_t operator()(wrapterm::Term t) const noexcept { return std::hash<const void*>()(t.node()); }
};
