// Interprocedural termination analysis over the call graph.
//
// Forward pass: calling contexts, invariants and summaries, reused from a
// store while a new context is subsumed by the stored ones. Universal mode
// then looks for a ranking per procedure; conditional mode runs a backward
// pass that computes sufficient preconditions for termination bottom-up.
#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wrapterm/frontend/ast.hpp"
#include "wrapterm/synth/synth.hpp"

namespace wrapterm::driver {

enum class Status { Terminating, NonTerminating, PotentiallyNonTerminating, UnknownTimeout };

std::string to_string(Status s);
int exit_code(Status s);
/// Equal statuses stay; a timeout absorbs; otherwise nothing is claimed.
Status join(Status a, Status b);

enum class Mode { Ipta, Mta };
enum class Check { Universal, Conditional };

struct Options {
  Mode mode = Mode::Ipta;
  Check check = Check::Universal;
  synth::Config synth;
  double timeout_proc = 60;  // seconds
  double timeout = 1800;
  /// Non-empty: use this external DIMACS solver command.
  std::string external_solver;
  /// Non-empty: every solver check overwrites this file with its CNF.
  std::string dimacs_path;
};

struct ProcReport {
  std::string name;
  Status status = Status::PotentiallyNonTerminating;
  /// Per loop, components most significant first, as expressions.
  std::vector<std::vector<std::string>> ranking;
  std::string precondition = "false";
  /// Universal mode, TERMINATING: the certificate as checked (ψ is UNSAT for
  /// this ranking under this invariant, context and callee summaries).
  synth::LexRanking lex;
  synth::Invariants invariant;
  Formula context;
  Formula sums;
};

struct Verdict {
  Status status = Status::PotentiallyNonTerminating;
  Formula precondition;  // over the entry inputs
  std::string precondition_text = "false";
  std::vector<ProcReport> procedures;
  std::uint64_t solver_calls = 0;
  double wall_ms = 0;
};

class Analyzer {
 public:
  Analyzer(const frontend::Program& prog, Options opts);

  Verdict run();
  Verdict analyze_universal();
  Verdict analyze_conditional();

  /// The procedure transition system as analyzed (inlined in MTA mode).
  const ssa::ProcedureTS& ts(const std::string& name) const { return ts_.at(name); }
  const std::vector<std::string>& order() const { return order_; }
  std::uint64_t solver_calls() const { return env_.checks; }

  /// Forward-pass store: the contexts a procedure was analyzed under, each
  /// with its invariant and summary.
  struct Entry {
    Formula context;  // over the formals (inputs ++ outputs)
    synth::InvSum result;
  };
  const std::vector<Entry>& entries(const std::string& name) const;

  /// Runs the forward pass from the entry (a second call reuses the store).
  void analyze_forward_entry();

 private:
  void analyze_forward(const std::string& f, Formula ctx);
  bool subsumed(const std::string& f, Formula ctx);
  Formula sums_for(const ssa::ProcedureTS& ts);
  Formula summary_of(const std::string& callee);
  /// Summaries assumed only where the callee precondition holds.
  Formula terminating_sums_for(const ssa::ProcedureTS& ts);
  Status universal_status(const std::string& f, std::map<std::string, Status>& status, ProcReport& rep);
  void analyze_backward(const std::string& f, Formula ctx_u, std::map<std::string, Status>& status,
                        std::map<std::string, ProcReport>& reports);
  void begin_procedure();
  Verdict finish(Verdict v);
  std::vector<std::vector<std::string>> describe(const ssa::ProcedureTS& ts, const synth::LexRanking& r) const;

  const frontend::Program& prog_;
  Options opts_;
  SolverEnv env_;
  synth::Config cfg_;
  std::map<std::string, ssa::ProcedureTS> ts_;
  std::vector<std::string> order_;  // callees first
  std::string entry_;
  std::map<std::string, std::vector<Entry>> store_;
  std::map<std::string, Formula> preconds_;  // backward pass, over the inputs
  Clock::time_point start_;
  Clock::time_point deadline_;
};

/// Convenience: parse options are the caller's business; this analyzes `prog`.
Verdict analyze(const frontend::Program& prog, const Options& opts);

}  // namespace wrapterm::driver
