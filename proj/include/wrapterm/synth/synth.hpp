// Second-order synthesis on top of the SAT session: template invariants,
// summaries and calling contexts (model-guided bound tightening), linear
// lexicographic ranking functions (CEGIS), and sufficient preconditions for
// termination.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wrapterm/absdom/template.hpp"
#include "wrapterm/logic/session.hpp"
#include "wrapterm/ssa/ssa.hpp"

namespace wrapterm::synth {

struct SynthesisBounds {
  int max_lex = 3;
  int max_iter = 20;
  /// Coefficient ranges tried in order; 0 means the full width.
  std::vector<int> coeff_schedule{1, 10, 0};
  /// Evaluate ranking arithmetic at an extended width. Turning this off is
  /// unsound and only exists to show that the extension matters.
  bool width_extension = true;
  /// Let ranking templates read every variable both as unsigned and as signed.
  bool dual_reading = true;
  /// Conflict budget of one coefficient query; an exhausted budget counts as
  /// "no coefficients at this range".
  std::uint64_t theta_conflicts = 3000;
};

struct Config {
  SynthesisBounds bounds;
  /// Extra template rows (see absdom::Template::add_rows), applied to every
  /// invariant, summary and context template.
  std::string template_rows;
  std::size_t var_cap = 32;
  SolverEnv* env = nullptr;
};

/// Inputs every synthesis query shares.
struct Problem {
  const ssa::ProcedureTS* ts = nullptr;
  Formula context;  // over the inputs of ts
  Formula sums;     // instantiated callee summaries
};

// ---- invariants ----------------------------------------------------------

struct LoopInvariant {
  absdom::Template tpl;
  absdom::AbstractValue val;
};

struct Invariants {
  std::vector<LoopInvariant> loops;
  bool timed_out = false;
};

/// Interval template (plus configured rows) over the head variables of a loop.
absdom::Template loop_template(const ssa::LoopInfo& loop, const Config& cfg);
absdom::Template io_template(const std::vector<Term>& vars, const Config& cfg);

/// ⋀_i (ls_i ∧ g_head_i ⟹ I_i(lb_i)): the induction hypothesis.
Formula inv_premise(const ssa::ProcedureTS& ts, const Invariants& inv);
/// The premise plus ⋀_i (g_head_i ⟹ I_i(phi_i)); valid facts once the
/// invariant is proven.
Formula inv_facts(const ssa::ProcedureTS& ts, const Invariants& inv);
/// ⋀_i (g_head_i ⟹ I_i(phi_i)) ∧ (g_back_i ⟹ I_i(next_i)).
Formula inv_goal(const ssa::ProcedureTS& ts, const Invariants& inv);
/// Φ ∧ assumptions ∧ context ∧ sums.
Formula base_formula(const Problem& p);

Invariants infer_invariant(const Problem& p, const Config& cfg);
/// UNSAT(base ∧ premise ∧ ¬goal) in a fresh session.
bool check_invariant(const Problem& p, const Invariants& inv, SolverEnv* env = nullptr);

struct Summary {
  absdom::Template tpl;  // over inputs ++ outputs
  absdom::AbstractValue val;
  Formula formula(const std::vector<Term>& in, const std::vector<Term>& out) const;
};

struct InvSum {
  Invariants inv;
  Summary sum;
  bool timed_out = false;
};

InvSum comp_inv_sum_o(const Problem& p, const Config& cfg);
InvSum comp_inv_sum_o(const Problem& p, const Invariants& inv, const Config& cfg);

/// Forward calling context of call site `site` over the callee's formal
/// inputs and outputs (callee_ts supplies the formals).
Summary comp_callctx_o(const Problem& p, const Invariants& inv, std::size_t site, const ssa::ProcedureTS& callee,
                       const Config& cfg);
/// The join of the contexts of several sites of the same callee, in one
/// optimization over the union of their reachable argument values.
Summary comp_callctx_o(const Problem& p, const Invariants& inv, const std::vector<std::size_t>& sites,
                       const ssa::ProcedureTS& callee, const Config& cfg);

/// Validity of a summary / calling context in a fresh session.
bool check_summary(const Problem& p, const Invariants& inv, const Summary& sum, SolverEnv* env = nullptr);
bool check_callctx(const Problem& p, const Invariants& inv, std::size_t site, const ssa::ProcedureTS& callee,
                   const Summary& ctx, SolverEnv* env = nullptr);

// ---- ranking ---------------------------------------------------------------

struct LoopRanking {
  enum Kind { Bot, Finite, Top } kind = Bot;
  /// Component k is a coefficient vector over `terms`; the last component is
  /// the most significant.
  std::vector<std::vector<i128>> components;
  unsigned width = 0;  // arithmetic width used by the certificate
};

struct LexRanking {
  std::vector<LoopRanking> loops;
  std::uint64_t synthesis_calls = 0;
  bool top = false;  // no ranking; also set for procedures without loops
  bool is_top() const;
};

/// Variables the ranking of a loop ranges over: the modified head variables,
/// each read exactly by its signedness and (with dual_reading) also by the
/// opposite one. Each entry is (position in LoopInfo::vars, signed reading).
std::vector<std::pair<std::size_t, bool>> ranking_terms(const ssa::LoopInfo& loop, const SynthesisBounds& b);

/// R(x) at the ranking's width.
Term ranking_value(const ssa::LoopInfo& loop, const LoopRanking& r, std::size_t comp, const std::vector<Term>& vals,
                   const SynthesisBounds& b);
/// LR(x, x′): lexicographic decrease from `from` to `to`.
Formula lex_decrease(const ssa::LoopInfo& loop, const LoopRanking& r, const std::vector<Term>& from,
                     const std::vector<Term>& to, const SynthesisBounds& b);

/// Extra facts for the ranking check: callee preconditions at call sites
/// (violations count as a failure to terminate).
struct TermConds {
  Formula callee_violation = mk_false();  // ⋁ g_j ∧ ¬Pre_h(args_j)
};

/// ψ = base ∧ Inv ∧ assertions ∧ ⋁_i (g_back_i ∧ ¬LR_i) ∨ callee violation.
Formula ranking_violation(const Problem& p, const Invariants& inv, const LexRanking& r, const TermConds& tc,
                          const SynthesisBounds& b);

LexRanking comp_term_arg(const Problem& p, const Invariants& inv, const TermConds& tc, const Config& cfg);
/// UNSAT of ψ in a fresh session.
bool check_ranking(const Problem& p, const Invariants& inv, const LexRanking& r, const TermConds& tc,
                   const SynthesisBounds& b, SolverEnv* env = nullptr);

/// Φ ∧ Inv ∧ sums ∧ (g_out ∨ assertion failure ∨ blocked assume) is UNSAT:
/// no execution of the procedure ever leaves it.
bool exit_unreachable(const Problem& p, const Invariants& inv, SolverEnv* env);

// ---- preconditions ---------------------------------------------------------

/// Sufficient precondition over the inputs: a disjunction of pieces, each an
/// input box or the complement of one.
struct Precondition {
  struct Piece {
    absdom::AbstractValue box;
    bool negated = false;
  };
  absdom::Template tpl;  // over the inputs
  std::vector<Piece> pieces;
  std::vector<LexRanking> rankings;  // one per successful candidate
  Formula formula(const std::vector<Term>& in) const;
  /// Input-language expression ("true"/"false" at the extremes).
  std::string to_string() const;
  /// Drops pieces implied by the remaining ones (same formula, shorter text).
  void simplify(const std::vector<Term>& in, SolverEnv* env);
};

/// Over-approximation of the inputs that can reach a transition violating `r`
/// (or a callee precondition); its negation is sufficient for termination.
absdom::AbstractValue comp_nec_precond(const Problem& p, const Invariants& inv_o, const LexRanking& r,
                                       const TermConds& tc, const absdom::Template& t_pre, const Config& cfg);

/// Backward calling context of a call site over the callee's formal inputs,
/// in the {true, false} domain: false iff the site is unreachable.
Formula comp_callctx_u(const Problem& p, const Invariants& inv_o, std::size_t site, const ssa::ProcedureTS& callee,
                       const Config& cfg);

Precondition comp_precond_term(const Problem& p, const Invariants& inv_o, const TermConds& tc, const Config& cfg);

}  // namespace wrapterm::synth
