#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vcbr/config.hpp"
#include "vcbr/solver_state.hpp"

namespace vcbr {

/// Half-integral relaxation solution over the undecided subgraph. Doubled
/// values keep the arithmetic exact: x2 is 0, 1 or 2 per vertex.
struct LpSolution {
    std::vector<int> vertices;      // sorted undecided ids at snapshot time
    std::vector<std::uint8_t> x2;   // twice the LP value of vertices[i]
    std::vector<int> mate;          // mate[i]=j: left copy i matched to right copy j
    int matching_size = 0;
    std::uint64_t state_version = 0;

    int value2() const;
    double value() const { return value2() / 2.0; }
    bool fresh(const SolverState& state) const { return state_version == state.version(); }
};

/// Maximum matching on the auxiliary bipartite graph (left and right copy
/// per vertex, one edge pair per undecided edge), König cover extraction,
/// then a guarded rounding pass over the matching cycles that trades half
/// values for integral ones whenever feasibility and value are preserved.
LpSolution solve_lp_relaxation(const SolverState& state);

/// Greedy clique cover bound: sum of (|C|-1) over the cover's cliques.
int clique_lower_bound(const SolverState& state);

int lp_lower_bound(const LpSolution& lp);

/// Decomposes the half-valued vertices into the vertex-disjoint cycles the
/// matching induces and charges ceil(len/2) per cycle, plus the integral
/// contribution. At least as strong as the plain LP bound.
int cycle_lower_bound(const SolverState& state, const LpSolution& lp);

struct BoundTimers {
    std::int64_t clique_ns = 0;
    std::int64_t cycle_ns = 0;
};

/// Maximum over the enabled bounds, with ties resolved toward the strongest
/// claim (Cycle > Lp > Clique > Trivial). `lp` may be null or stale, in
/// which case the LP-based bounds are skipped.
std::pair<int, LowerBoundKind> best_lower_bound(const SolverState& state,
                                                const ReductionConfig& config,
                                                const LpSolution* lp,
                                                BoundTimers* timers = nullptr);

}  // namespace vcbr
