// Template polyhedra (rows c·x ≤ d) over a fixed list of program variables.
//
// Row arithmetic is done at an extended signed width so that c·x never wraps
// for any values of the variables; every variable is extended exactly by its
// signedness.
#pragma once

#include <string>
#include <vector>

#include "wrapterm/logic/term.hpp"

namespace wrapterm::absdom {

struct VarInfo {
  std::string name;
  unsigned width = 0;
  bool is_signed = false;
};

VarInfo info_of(Term var);

class Template {
 public:
  struct Row {
    std::vector<i128> coeffs;  // one per variable
  };

  Template() = default;
  explicit Template(std::vector<VarInfo> vars) : vars_(std::move(vars)) {}

  /// Rows x ≤ d and −x ≤ d for every variable.
  static Template interval(const std::vector<VarInfo>& vars);

  void add_row(Row r);
  /// Parse rows from text: one linear expression per line, e.g. `x - 2*y`.
  /// Blank lines and `#` comments are skipped. Rows that mention a name not
  /// among the variables are dropped when `skip_unknown` holds, otherwise
  /// they are an error.
  void add_rows(const std::string& text, bool skip_unknown);

  std::size_t size() const { return rows_.size(); }
  const std::vector<VarInfo>& vars() const { return vars_; }
  const Row& row(std::size_t i) const { return rows_[i]; }

  i128 row_min(std::size_t i) const;
  i128 row_max(std::size_t i) const;
  /// Signed width at which every row value and bound is representable.
  unsigned width() const;

  /// c_i · vals at width(); `vals` are terms of the variables' widths.
  Term row_term(std::size_t i, const std::vector<Term>& vals) const;
  Formula row_le(std::size_t i, const std::vector<Term>& vals, i128 d) const;
  i128 eval_row(std::size_t i, const std::vector<i128>& vals) const;

  std::string row_to_string(std::size_t i) const;

 private:
  std::vector<VarInfo> vars_;
  std::vector<Row> rows_;
};

struct Bound {
  enum Kind { Bot, Finite, Top } kind = Bot;
  i128 d = 0;
};

/// One bound per template row. The value is ⊥ as soon as one row is ⊥.
class AbstractValue {
 public:
  AbstractValue() = default;
  static AbstractValue bottom(std::size_t n) { return AbstractValue(std::vector<Bound>(n)); }
  static AbstractValue top(std::size_t n) { return AbstractValue(std::vector<Bound>(n, Bound{Bound::Top, 0})); }
  explicit AbstractValue(std::vector<Bound> rows) : rows_(std::move(rows)) {}

  std::size_t size() const { return rows_.size(); }
  const Bound& operator[](std::size_t i) const { return rows_[i]; }
  Bound& operator[](std::size_t i) { return rows_[i]; }

  bool is_bottom() const;
  bool is_top() const;

  /// Finite bounds that cover a row's whole range become ⊤; bounds below the
  /// range become ⊥.
  void normalize(const Template& t);

  friend bool operator==(const AbstractValue& a, const AbstractValue& b);

 private:
  std::vector<Bound> rows_;
};

Formula concretize(const Template& t, const AbstractValue& v, const std::vector<Term>& vals);
AbstractValue join(const AbstractValue& a, const AbstractValue& b);
/// a ⊑ b row by row.
bool is_subsumed(const AbstractValue& a, const AbstractValue& b);
/// Conjunction of the constraints in C-like syntax, "true"/"false" at the extremes.
std::string to_string(const Template& t, const AbstractValue& v);

}  // namespace wrapterm::absdom
