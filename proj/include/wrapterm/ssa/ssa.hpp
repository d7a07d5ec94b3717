// Acyclic SSA encoding of a procedure.
//
// Every assignment introduces a fresh symbol `name#k`. A loop i gets a free
// loop-select Boolean `ls#i` and, for each variable it modifies, a free
// back-edge symbol `name#lb<i>`; the loop-head value is
//   phi = ls ? lb : entry
// so the encoding stays acyclic and covers every iteration. Back-edge values
// at the end of the body are recorded as `next`. Control flow is captured by
// guard formulas over the symbols.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wrapterm/frontend/ast.hpp"
#include "wrapterm/logic/term.hpp"

namespace wrapterm::ssa {

struct LoopInfo {
  int index = 0;
  int parent = -1;      // enclosing loop, -1 at top level
  frontend::Loc loc;
  Term ls;              // loop-select
  Formula g_head;       // loop head reached
  Formula cond;         // loop condition over head values
  Formula g_back;       // end of the body reached (back edge taken)
  std::vector<std::string> vars;   // source-level names of the head state
  std::vector<Term> entry;         // value on entry
  std::vector<Term> lb;            // back-edge symbol; the value itself when unmodified
  std::vector<Term> phi;           // head value
  std::vector<Term> next;          // value at the end of the body
  std::vector<bool> modified;
};

struct CallSite {
  std::string callee;
  int index = 0;
  Formula guard;
  std::vector<Term> in;
  std::vector<Term> out;
  int loop = -1;  // innermost enclosing loop
  frontend::Loc loc;
};

struct Assertion {
  Formula guard;
  Formula cond;
  frontend::Loc loc;
};

struct Def {
  Term lhs;
  Term rhs;
  int loop = -1;       // innermost loop containing the definition
  bool output = false; // binds an output symbol
};

struct ProcedureTS {
  std::string name;
  std::vector<Term> inputs;
  std::vector<std::string> input_names;
  std::vector<Term> outputs;
  std::vector<Def> defs;
  Formula phi;                 // conjunction of all definitions
  Formula assumptions;         // ⋀ g ⟹ e over assume statements
  std::vector<Assertion> assertions;
  std::vector<Assertion> assumes;  // the same assume statements, one by one
  Formula g_out;               // procedure exit reached
  std::vector<LoopInfo> loops;
  std::vector<CallSite> calls;

  // derived (Init, Trans, Out) views, used for printing
  Formula init;
  Formula trans;
  Formula out;

  /// ⋀ g ⟹ c over all assertions (assertion-violating traces stop there).
  Formula assertion_assumes() const;
  /// ⋁ g ∧ ¬c over all assertions.
  Formula assertion_failure() const;
  /// ⋁ g ∧ ¬e over all assume statements.
  Formula assume_blocked() const;
};

struct EncodeOptions {
  /// Globals start from their initializers (the procedure is the entry).
  bool is_entry = false;
  /// Replace every call by the callee body (monolithic mode).
  bool inline_calls = false;
};

ProcedureTS encode(const frontend::Program& prog, const std::string& proc, const EncodeOptions& opts = {});

/// Summary formula of a callee over its formal inputs/outputs, rewritten to
/// the actual parameters of `site`.
Formula instantiate(const CallSite& site, const ProcedureTS& callee, Formula f);

/// ⋀_j g_j ⟹ sum_j at the call sites of `ts`. `lookup` returns the callee
/// TS and its summary (or nullptr for "no summary", i.e. true).
using SummaryLookup = std::function<std::pair<const ProcedureTS*, Formula>(const CallSite&)>;
Formula instantiate_summaries(const ProcedureTS& ts, const SummaryLookup& lookup);

/// The entry procedure with every call inlined.
ProcedureTS inline_all(const frontend::Program& prog);

/// Text listing of the encoding, one definition per line.
std::string emit(const ProcedureTS& ts);

}  // namespace wrapterm::ssa
