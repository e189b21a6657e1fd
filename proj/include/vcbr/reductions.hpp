#pragma once

#include <chrono>
#include <functional>
#include <optional>

#include "vcbr/bounds.hpp"
#include "vcbr/config.hpp"
#include "vcbr/solver_state.hpp"

namespace vcbr {

struct ReductionOutcome {
    bool reduced_any = false;
    int vertices_reduced = 0;  // status decisions made by the rule
    std::chrono::nanoseconds elapsed{0};
};

// Each rule scans candidates in ascending vertex id and applies every match
// it can justify; the heavier rules re-scan until a pass changes nothing.

ReductionOutcome apply_deg1(SolverState& state);
ReductionOutcome apply_dominance(SolverState& state);
ReductionOutcome apply_fold2(SolverState& state);
ReductionOutcome apply_twin(SolverState& state);
ReductionOutcome apply_lp(SolverState& state, const LpSolution& lp);
ReductionOutcome apply_unconfined(SolverState& state);
/// The confinement check for one vertex, without mutating anything.
bool is_unconfined(const SolverState& state, int v);
ReductionOutcome apply_funnel(SolverState& state);
ReductionOutcome apply_desk(SolverState& state);

enum class ReduceStatus { Alive, ReductionCut };

struct ReduceHooks {
    /// Invoked when the undecided count drops to the shrink threshold; must
    /// decide the whole remaining instance (component compaction + fresh
    /// solves). reduce() returns ReductionCut right after.
    std::function<void(SolverState&)> component_solve;
    /// Per-rule accounting callback (time, counts).
    std::function<void(ReductionKind, const ReductionOutcome&)> on_outcome;
    /// Most recent LP relaxation, kept fresh for the LP/cycle bounds.
    std::optional<LpSolution>* lp_cache = nullptr;
};

/// The reduction loop: enabled rules run in the fixed order deg1, dominance,
/// unconfined, lp, fold2, twin, funnel, desk, restarting from the top after
/// any success. Returns ReductionCut when the instance is fully decided or
/// was handed to component_solve at the shrink threshold.
ReduceStatus reduce(SolverState& state, const ReductionConfig& config,
                    const ReduceHooks& hooks = {});

}  // namespace vcbr
