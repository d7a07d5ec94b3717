// Incremental solver session over bit-vector formulas.
//
// Formulas are bit-blasted on demand into a single clause database that
// only ever grows. Per-check assumptions are literals, so nothing needs to
// be popped; temporary constraints are added under an activation literal
// and retired with a unit clause afterwards.
#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wrapterm/logic/bitblast.hpp"
#include "wrapterm/logic/cdcl.hpp"
#include "wrapterm/logic/term.hpp"

namespace wrapterm {

using Clock = std::chrono::steady_clock;

class SolverTimeout : public std::runtime_error {
 public:
  SolverTimeout() : std::runtime_error("solver budget exhausted") {}
};

/// Propositional back end. Literals are DIMACS ints.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual int new_var() = 0;
  virtual void add_clause(const std::vector<int>& lits) = 0;
  virtual sat::Result solve(const std::vector<int>& assumptions, const sat::Limits& limits) = 0;
  virtual bool model_value(int var) const = 0;
};

std::unique_ptr<Backend> make_cdcl_backend();
/// Runs `command FILE` for each check; the command must print a DIMACS
/// result ("s SATISFIABLE" / "s UNSATISFIABLE" and "v" lines).
std::unique_ptr<Backend> make_dimacs_backend(std::string command);

/// Shared per-run settings and counters. Not thread-safe; one per analysis.
struct SolverEnv {
  std::uint64_t checks = 0;
  std::optional<Clock::time_point> deadline;
  /// Non-empty: every check overwrites this file with its CNF.
  std::string dimacs_path;
  /// Non-empty: use the external DIMACS adapter with this command.
  std::string external_command;
};

enum class CheckResult { Sat, Unsat };

class SolverSession {
 public:
  explicit SolverSession(SolverEnv* env = nullptr);
  ~SolverSession();
  SolverSession(const SolverSession&) = delete;
  SolverSession& operator=(const SolverSession&) = delete;

  void assert_formula(Formula f);
  /// Fresh activation literal for guarded constraints.
  int new_activation();
  /// Adds act ⟹ f.
  void assert_under(int act, Formula f);
  /// Permanently disables an activation literal.
  void retire(int act);

  int literal(Formula f) { return blaster_.literal(f); }
  const std::vector<int>& bits(Term t) { return blaster_.bits(t); }

  /// Throws SolverTimeout when the deadline passes.
  CheckResult check(const std::vector<Formula>& assumptions = {}, const std::vector<int>& lits = {});
  /// As check(), but gives up (nullopt) after `conflict_budget` conflicts.
  /// The external back end ignores the budget.
  std::optional<CheckResult> try_check(const std::vector<Formula>& assumptions, std::uint64_t conflict_budget);

  /// Model access after Sat. Terms never blasted in this session evaluate
  /// with unmentioned variables read as 0.
  u128 value(Term t);
  bool lit_value(int lit) const;
  Valuation model(const std::vector<Term>& vars);

  std::uint64_t checks() const { return checks_; }
  std::size_t num_vars() const { return static_cast<std::size_t>(nvars_); }

  void write_dimacs(std::ostream& os, const std::vector<int>& assumptions) const;

 private:
  class Sink;
  sat::Result solve(const std::vector<Formula>& assumptions, const std::vector<int>& lits,
                    std::optional<std::uint64_t> budget);
  SolverEnv* env_;
  std::unique_ptr<Backend> backend_;
  std::vector<std::vector<int>> log_;
  bool logging_ = false;
  int nvars_ = 0;
  std::uint64_t checks_ = 0;
  std::unique_ptr<Sink> sink_;
  BitBlaster blaster_;  // must follow sink_ and the logging state
};

/// One-shot validity check of `f` in a fresh session.
bool is_valid(Formula f, SolverEnv* env = nullptr);
bool is_satisfiable(Formula f, SolverEnv* env = nullptr);

}  // namespace wrapterm
