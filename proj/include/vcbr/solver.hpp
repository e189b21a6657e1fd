#pragma once

#include <chrono>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vcbr/bounds.hpp"
#include "vcbr/config.hpp"
#include "vcbr/graph.hpp"
#include "vcbr/reductions.hpp"
#include "vcbr/rng.hpp"
#include "vcbr/solver_state.hpp"
#include "vcbr/stats.hpp"

namespace vcbr {

enum class SolveStatus { Optimal, Timeout };
enum class NodeStatus { Solved, Alive };

struct SolveResult {
    int value = 0;
    std::vector<int> cover;     // internal ids of the input graph
    std::string solution_bits;  // over the label range; '_' marks absent labels
    SolveStatus status = SolveStatus::Optimal;
    StatsReport stats;
    double runtime_seconds = 0.0;
};

/// Greedy max-degree cover; the solver's first incumbent.
std::pair<int, std::vector<int>> initial_upper_bound(const Graph& g);

std::string solution_bit_string(const Graph& g, const std::vector<int>& cover);

/// Exact minimum vertex cover via branch and reduce.
SolveResult solve(const Graph& g, const ReductionConfig& config);

// Accumulators, debug sinks and the deadline shared between a solver and the
// fresh solvers it spawns for components.
struct SolveShared {
    std::array<std::int64_t, kReductionKinds + 1> red_time_ns{};
    std::array<std::int64_t, kReductionKinds + 1> red_count{};
    std::array<std::int64_t, kReductionKinds + 1> red_effective{};
    std::array<std::int64_t, kReductionKinds + 1> red_total{};
    std::array<std::int64_t, 4> lb_effective{};
    std::int64_t clique_lb_ns = 0;
    std::int64_t cycle_lb_ns = 0;
    std::int64_t num_branches = 0;
    std::int64_t num_leftcuts = 0;
    std::array<std::int64_t, 4> decisions{};  // by DecisionSource
    std::chrono::steady_clock::time_point deadline;
    bool timed_out = false;
    int debug_level = 0;
    int trace_level = 0;
    std::ostream* log = nullptr;
};

class Solver {
public:
    Solver(const Graph& g, const ReductionConfig& config);
    Solver(Graph&&, const ReductionConfig&) = delete;  // graph must outlive the solver
    /// Fresh sub-solver sharing counters and the time budget.
    Solver(const Graph& g, const ReductionConfig& config, SolveShared* shared, int depth);

    SolveResult run(bool root_only = false);

    // The node pipeline, exposed for tests.
    NodeStatus process_node();
    /// Expands the two children of a branching vertex; prunes each child
    /// whose cover count plus lower bound cannot beat the incumbent.
    void branch();
    int select_branching_vertex();
    int brute_force_component(const std::vector<int>& vertices);
    /// Compacts every undecided component into a fresh graph and solves it
    /// with a fresh solver; decides all undecided vertices.
    int component_solve();

    SolverState& state() { return state_; }
    int best_value() const { return best_value_; }
    SolveShared& shared() { return *shared_; }

private:
    void solve_node();
    void explore_child(bool left_child);
    void capture_incumbent();
    void ensure_lp_for_bounds();
    bool out_of_time();

    const Graph& graph_;
    ReductionConfig config_;
    SolverState state_;
    std::optional<LpSolution> lp_cache_;
    std::unique_ptr<SolveShared> owned_shared_;
    SolveShared* shared_;
    Rng rng_;
    int depth_ = 0;
    bool top_level_ = true;
    int best_value_ = 0;
    std::vector<int> best_cover_;
    std::int64_t root_lb_ = -1;
};

}  // namespace vcbr
