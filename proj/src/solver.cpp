#include "vcbr/solver.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace vcbr {

namespace {
using clock = std::chrono::steady_clock;
}

std::pair<int, std::vector<int>> initial_upper_bound(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> degree(n);
    std::vector<char> taken(n, 0);
    std::int64_t remaining = g.num_edges();
    for (int v = 0; v < n; v++) degree[v] = g.degree(v);
    std::vector<int> cover;
    while (remaining > 0) {
        int pick = -1;
        for (int v = 0; v < n; v++)
            if (!taken[v] && (pick < 0 || degree[v] > degree[pick])) pick = v;
        taken[pick] = 1;
        cover.push_back(pick);
        for (int u : g.neighbors(pick))
            if (!taken[u]) {
                degree[u]--;
                remaining--;
            }
        degree[pick] = 0;
    }
    std::sort(cover.begin(), cover.end());
    return {static_cast<int>(cover.size()), cover};
}

std::string solution_bit_string(const Graph& g, const std::vector<int>& cover) {
    int max_label = 0;
    for (int v = 0; v < g.num_vertices(); v++) max_label = std::max(max_label, g.label(v));
    std::string bits(max_label + 1, '_');
    for (int v = 0; v < g.num_vertices(); v++) bits[g.label(v)] = '0';
    for (int v : cover) bits[g.label(v)] = '1';
    return bits;
}

Solver::Solver(const Graph& g, const ReductionConfig& config)
    : graph_(g),
      config_(config),
      state_(g),
      owned_shared_(std::make_unique<SolveShared>()),
      shared_(owned_shared_.get()),
      rng_(config.seed),
      top_level_(true) {
    config_.validate();
    shared_->deadline =
        clock::now() + std::chrono::duration_cast<clock::duration>(
                           std::chrono::duration<double>(config_.timeout_seconds));
    state_.attach_decision_counters(&shared_->decisions);
}

Solver::Solver(const Graph& g, const ReductionConfig& config, SolveShared* shared, int depth)
    : graph_(g),
      config_(config),
      state_(g),
      shared_(shared),
      rng_(config.seed),
      depth_(depth),
      top_level_(false) {
    state_.attach_decision_counters(&shared_->decisions);
}

bool Solver::out_of_time() {
    if (shared_->timed_out) return true;
    if (clock::now() >= shared_->deadline) {
        shared_->timed_out = true;
        return true;
    }
    return false;
}

void Solver::ensure_lp_for_bounds() {
    if (!config_.lp_lb && !config_.cycle_lb) return;
    if (lp_cache_ && lp_cache_->fresh(state_)) return;
    if (state_.undecided() == 0) return;
    // The LP is recomputed on demand; when the cycle bound asked for it the
    // cost lands on the cycle-bound timer.
    auto t0 = clock::now();
    lp_cache_ = solve_lp_relaxation(state_);
    if (config_.cycle_lb)
        shared_->cycle_lb_ns +=
            std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0).count();
}

void Solver::capture_incumbent() {
    int value = state_.cover_count();
    if (value >= best_value_) return;
    best_value_ = value;
    best_cover_ = unfold_solution(state_.ledger(), state_.cover_vertices(),
                                  state_.total_vertices(), state_.base_vertices());
    assert(static_cast<int>(best_cover_.size()) == value);
    if (shared_->trace_level >= 1 && shared_->log) {
        *shared_->log << "{\"event\":\"incumbent\",\"depth\":" << depth_
                      << ",\"value\":" << value << ",\"branches\":" << shared_->num_branches;
        if (shared_->trace_level >= 2 && shared_->log) {
            *shared_->log << ",\"solution\":\"" << solution_bit_string(graph_, best_cover_)
                          << "\"";
        }
        *shared_->log << "}\n";
    }
}

NodeStatus Solver::process_node() {
    ReduceHooks hooks;
    hooks.component_solve = [this](SolverState&) { component_solve(); };
    hooks.lp_cache = &lp_cache_;
    hooks.on_outcome = [this](ReductionKind kind, const ReductionOutcome& outcome) {
        int i = static_cast<int>(kind);
        shared_->red_time_ns[i] += outcome.elapsed.count();
        shared_->red_total[i]++;
        if (outcome.reduced_any) {
            shared_->red_effective[i]++;
            shared_->red_count[i] += outcome.vertices_reduced;
        }
        if (shared_->debug_level >= 3 && shared_->log && outcome.reduced_any)
            *shared_->log << "# depth " << depth_ << ": " << reduction_name(kind) << " reduced "
                          << outcome.vertices_reduced << "\n";
    };
    if (reduce(state_, config_, hooks) == ReduceStatus::ReductionCut) return NodeStatus::Solved;
    if (state_.undecided() == 0) return NodeStatus::Solved;

    auto components = connected_components(state_);
    if (components.size() > 1) {
        if (shared_->debug_level >= 1 && shared_->log)
            *shared_->log << "# depth " << depth_ << ": decompose into " << components.size()
                          << " components\n";
        component_solve();
        return NodeStatus::Solved;
    }
    if (state_.undecided() <= config_.brute_force_threshold) {
        brute_force_component(state_.undecided_vertices());
        return NodeStatus::Solved;
    }
    return NodeStatus::Alive;
}

int Solver::select_branching_vertex() {
    int pick = -1;
    switch (config_.branching) {
        case BranchingRule::MaxDeg:
            for (int v = 0; v < state_.total_vertices(); v++)
                if (state_.undecided_vertex(v) && (pick < 0 || state_.degree(v) > state_.degree(pick)))
                    pick = v;
            break;
        case BranchingRule::MinDeg:
            for (int v = 0; v < state_.total_vertices(); v++)
                if (state_.undecided_vertex(v) && (pick < 0 || state_.degree(v) < state_.degree(pick)))
                    pick = v;
            break;
        case BranchingRule::Random: {
            int k = rng_.below(state_.undecided());
            for (int v = 0; v < state_.total_vertices(); v++)
                if (state_.undecided_vertex(v) && k-- == 0) {
                    pick = v;
                    break;
                }
            break;
        }
    }
    if (pick < 0) throw std::logic_error("select_branching_vertex: no undecided vertex");
    return pick;
}

void Solver::explore_child(bool left_child) {
    BoundTimers timers;
    const LpSolution* lp = lp_cache_ && lp_cache_->fresh(state_) ? &*lp_cache_ : nullptr;
    auto [lb, kind] = best_lower_bound(state_, config_, lp, &timers);
    shared_->clique_lb_ns += timers.clique_ns;
    shared_->cycle_lb_ns += timers.cycle_ns;
    if (state_.cover_count() + lb >= best_value_) {
        shared_->lb_effective[static_cast<int>(kind)]++;
        if (left_child) shared_->num_leftcuts++;
        return;
    }
    depth_++;
    solve_node();
    depth_--;
}

void Solver::branch() {
    shared_->num_branches++;
    if (out_of_time()) return;
    int x = select_branching_vertex();
    if (shared_->debug_level >= 2 && shared_->log)
        *shared_->log << "# depth " << depth_ << ": branch on " << x << " (degree "
                      << state_.degree(x) << ")\n";

    FrameToken left = state_.save();
    state_.set_status(x, VertexStatus::InCover, DecisionSource::Branching);
    explore_child(true);
    state_.restore(left);

    FrameToken right = state_.save();
    state_.set_status(x, VertexStatus::OutOfCover, DecisionSource::Branching);
    for (int u : state_.undecided_neighbors(x))
        state_.set_status(u, VertexStatus::InCover, DecisionSource::Branching);
    explore_child(false);
    state_.restore(right);
}

void Solver::solve_node() {
    if (out_of_time()) return;
    if (process_node() == NodeStatus::Solved) {
        capture_incumbent();
        return;
    }
    ensure_lp_for_bounds();
    BoundTimers timers;
    const LpSolution* lp = lp_cache_ && lp_cache_->fresh(state_) ? &*lp_cache_ : nullptr;
    auto [lb, kind] = best_lower_bound(state_, config_, lp, &timers);
    shared_->clique_lb_ns += timers.clique_ns;
    shared_->cycle_lb_ns += timers.cycle_ns;
    if (top_level_ && depth_ == 0 && root_lb_ < 0) root_lb_ = state_.cover_count() + lb;
    if (state_.cover_count() + lb >= best_value_) {
        shared_->lb_effective[static_cast<int>(kind)]++;
        return;
    }
    branch();
}

int Solver::brute_force_component(const std::vector<int>& vertices) {
    int k = static_cast<int>(vertices.size());
    if (k > config_.brute_force_threshold)
        throw std::logic_error("brute force: component exceeds threshold");
    if (k == 0) return 0;
    std::vector<std::uint32_t> adj_mask(k, 0);
    for (int i = 0; i < k; i++)
        for (int j = i + 1; j < k; j++)
            if (state_.adjacent(vertices[i], vertices[j])) {
                adj_mask[i] |= 1u << j;
                adj_mask[j] |= 1u << i;
            }
    std::uint32_t best_mask = (1u << k) - 1;
    int best_size = k;
    for (std::uint32_t mask = 0; mask < (1u << k); mask++) {
        int size = __builtin_popcount(mask);
        if (size >= best_size) continue;
        bool valid = true;
        for (int i = 0; i < k && valid; i++)
            if (!(mask >> i & 1u) && (adj_mask[i] & ~mask)) valid = false;
        if (valid) {
            best_mask = mask;
            best_size = size;
        }
    }
    for (int i = 0; i < k; i++)
        state_.set_status(vertices[i],
                          (best_mask >> i & 1u) ? VertexStatus::InCover : VertexStatus::OutOfCover,
                          DecisionSource::BruteForce);
    return best_size;
}

int Solver::component_solve() {
    auto components = connected_components(state_);
    int total = 0;
    for (const auto& comp : components) {
        int k = static_cast<int>(comp.size());
        std::vector<int> index(state_.total_vertices(), -1);
        for (int i = 0; i < k; i++) index[comp[i]] = i;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < k; i++)
            state_.for_neighbors(comp[i], [&](int u) {
                if (index[u] > i) edges.emplace_back(i, index[u]);
            });
        Graph sub(k, edges);
        Solver child(sub, config_, shared_, depth_ + 1);
        SolveResult result = child.run();
        std::vector<char> in_cover(k, 0);
        for (int v : result.cover) in_cover[v] = 1;
        for (int i = 0; i < k; i++)
            state_.set_status(comp[i],
                              in_cover[i] ? VertexStatus::InCover : VertexStatus::OutOfCover,
                              DecisionSource::Decompose);
        total += result.value;
    }
    return total;
}

SolveResult Solver::run(bool root_only) {
    auto start = clock::now();
    auto [ub, cover] = initial_upper_bound(graph_);
    best_value_ = ub;
    best_cover_ = std::move(cover);
    if (shared_->log && (top_level_ ? shared_->debug_level >= 1 : shared_->debug_level >= 2))
        *shared_->log << "# solve n=" << graph_.num_vertices() << " m=" << graph_.num_edges()
                      << " greedy upper bound " << ub << "\n";

    bool root_solved = false;
    if (root_only) {
        if (process_node() == NodeStatus::Solved) {
            capture_incumbent();
            root_solved = true;
        }
    } else {
        solve_node();
    }

    SolveResult result;
    result.value = best_value_;
    result.cover = best_cover_;
    result.solution_bits = solution_bit_string(graph_, best_cover_);
    result.status = shared_->timed_out || (root_only && !root_solved) ? SolveStatus::Timeout
                                                                      : SolveStatus::Optimal;
    result.runtime_seconds =
        std::chrono::duration_cast<std::chrono::duration<double>>(clock::now() - start).count();

    StatsReport& s = result.stats;
    s.num_vertices = graph_.num_vertices();
    s.num_edges = graph_.num_edges();
    s.value = best_value_;
    s.runtime_ms = static_cast<std::int64_t>(result.runtime_seconds * 1000.0);
    s.num_branches = shared_->num_branches;
    for (int i = 0; i < kReductionKinds; i++) {
        s.reductions[i].time_us = shared_->red_time_ns[i] / 1000;
        s.reductions[i].count = shared_->red_count[i];
        s.reductions[i].effective_calls = shared_->red_effective[i];
        s.reductions[i].total_calls = shared_->red_total[i];
    }
    s.effective_lb = shared_->lb_effective;
    s.clique_lb_time_us = shared_->clique_lb_ns / 1000;
    s.cycle_lb_time_us = shared_->cycle_lb_ns / 1000;
    s.num_leftcuts = shared_->num_leftcuts;
    s.root_lb = root_lb_ >= 0 ? root_lb_ : best_value_;
    return result;
}

SolveResult solve(const Graph& g, const ReductionConfig& config) {
    Solver solver(g, config);
    return solver.run();
}

}  // namespace vcbr
