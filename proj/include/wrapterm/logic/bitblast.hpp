// Tseitin bit-blasting of bit-vector terms into CNF.
#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "wrapterm/logic/term.hpp"

namespace wrapterm {

/// Clause sink fed by the blaster; literals are DIMACS ints.
class ClauseSink {
 public:
  virtual ~ClauseSink() = default;
  virtual int new_var() = 0;
  virtual void add_clause(const std::vector<int>& lits) = 0;
};

/// Plain CNF container.
struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

class CnfSink : public ClauseSink {
 public:
  explicit CnfSink(Cnf& cnf) : cnf_(cnf) {}
  int new_var() override { return ++cnf_.num_vars; }
  void add_clause(const std::vector<int>& lits) override { cnf_.clauses.push_back(lits); }

 private:
  Cnf& cnf_;
};

/// Incremental blaster. Literal 0 is never produced; the constants true and
/// false are represented by a dedicated variable fixed by a unit clause and
/// folded away wherever possible. Variables are numbered in first-use
/// order, so numbering is deterministic.
class BitBlaster {
 public:
  explicit BitBlaster(ClauseSink& sink);

  /// Bits of `t`, least significant first.
  const std::vector<int>& bits(Term t);
  /// Single literal of a Boolean term.
  int literal(Formula f);
  /// Add `f` as a hard constraint. Top-level conjunctions and equalities are
  /// split into their parts.
  void assert_formula(Formula f);

  int true_lit() const { return true_; }
  int false_lit() const { return -true_; }
  bool has_bits(Term t) const { return cache_.count(t.node()) != 0; }

 private:
  const std::vector<int>& blast(Term t);
  int fresh();
  int g_and(int a, int b);
  int g_or(int a, int b) { return -g_and(-a, -b); }
  int g_xor(int a, int b);
  int g_mux(int c, int a, int b);
  int g_and_n(const std::vector<int>& ls);
  std::vector<int> adder(const std::vector<int>& a, const std::vector<int>& b, int carry_in, int* carry_out = nullptr);
  std::vector<int> multiplier(const std::vector<int>& a, const std::vector<int>& b);
  std::vector<int> shifter(const std::vector<int>& a, const std::vector<int>& s, Op op);
  int ult(const std::vector<int>& a, const std::vector<int>& b);
  int equal(const std::vector<int>& a, const std::vector<int>& b);
  bool is_const_lit(int l) const { return l == true_ || l == -true_; }
  void clause(std::vector<int> c);

  ClauseSink& sink_;
  int true_;
  std::unordered_map<const Node*, std::vector<int>> cache_;
  std::unordered_map<std::uint64_t, int> and_cache_;
};

/// One-shot CNF for a Boolean term (the CNF is equisatisfiable with `f`).
Cnf bitblast(Formula f);

}  // namespace wrapterm
