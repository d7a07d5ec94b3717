// A compact conflict-driven clause-learning SAT solver with assumption-based
// incremental solving (two watched literals, VSIDS, phase saving, Luby
// restarts, learnt clause reduction).
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace wrapterm::sat {

/// DIMACS-style literal: +v / -v for variable v >= 1.
using DLit = int;

enum class Result { Sat, Unsat, Unknown };

using Clock = std::chrono::steady_clock;

struct Limits {
  std::optional<Clock::time_point> deadline;
  std::optional<std::uint64_t> conflict_budget;
};

class Solver {
 public:
  Solver();
  ~Solver();
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  /// Returns the new variable index (>= 1).
  int new_var();
  int num_vars() const { return static_cast<int>(assigns_.size()); }

  /// False if the clause database became trivially unsatisfiable.
  bool add_clause(std::span<const DLit> lits);

  Result solve(std::span<const DLit> assumptions = {}, const Limits& limits = {});

  /// Model value after Sat; unassigned variables read as false.
  bool model_value(int var) const;

  std::uint64_t conflicts() const { return stats_conflicts_; }
  std::uint64_t decisions() const { return stats_decisions_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  std::size_t num_learnts() const { return learnts_.size(); }

 private:
  using Lit = std::uint32_t;  // 2*var + sign
  struct Clause;
  struct Watcher {
    Clause* clause;
    Lit blocker;
  };

  static Lit to_lit(DLit d);
  static Lit neg(Lit l) { return l ^ 1u; }
  static std::uint32_t var_of(Lit l) { return l >> 1; }
  std::int8_t lit_value(Lit l) const;

  void enqueue(Lit l, Clause* reason);
  Clause* propagate();
  void analyze(Clause* conflict, std::vector<Lit>& learnt, int& backtrack_level);
  bool lit_redundant(Lit l, std::uint32_t abstract_levels);
  void cancel_until(int level);
  Lit pick_branch();
  void attach(Clause* c);
  void detach(Clause* c);
  void reduce_db();
  bool locked(const Clause* c) const;
  void bump_var(std::uint32_t v);
  void bump_clause(Clause* c);
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }
  std::uint32_t abstract_level(std::uint32_t v) const { return 1u << (level_[v] & 31); }

  void heap_insert(std::uint32_t v);
  void heap_up(std::size_t i);
  void heap_down(std::size_t i);
  std::uint32_t heap_pop();
  bool heap_lt(std::uint32_t a, std::uint32_t b) const { return activity_[a] > activity_[b]; }

  std::vector<Clause*> clauses_;
  std::vector<Clause*> learnts_;
  std::vector<std::vector<Watcher>> watches_;
  std::vector<std::int8_t> assigns_;  // 0 false, 1 true, 2 undef
  std::vector<std::int8_t> polarity_;
  std::vector<int> level_;
  std::vector<Clause*> reason_;
  std::vector<double> activity_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<std::uint32_t> heap_;
  std::vector<int> heap_index_;
  std::vector<std::int8_t> seen_;
  std::vector<Lit> analyze_stack_;
  std::vector<Lit> analyze_toclear_;
  std::vector<bool> model_;
  double var_inc_ = 1.0;
  double var_decay_ = 0.95;
  double cla_inc_ = 1.0;
  double cla_decay_ = 0.999;
  double max_learnts_ = 0;
  bool ok_ = true;
  std::uint64_t stats_conflicts_ = 0;
  std::uint64_t stats_decisions_ = 0;
};

}  // namespace wrapterm::sat
