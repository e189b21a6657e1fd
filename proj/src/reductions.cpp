#include "vcbr/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace vcbr {

namespace {

using clock = std::chrono::steady_clock;

struct Timer {
    clock::time_point start = clock::now();
    std::chrono::nanoseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start);
    }
};

constexpr auto kIn = VertexStatus::InCover;
constexpr auto kOut = VertexStatus::OutOfCover;
constexpr auto kRed = DecisionSource::Reduction;

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

ReductionOutcome apply_deg1(SolverState& state) {
    Timer timer;
    ReductionOutcome out;
    std::vector<int> work;
    for (int v = 0; v < state.total_vertices(); v++)
        if (state.undecided_vertex(v) && state.degree(v) <= 1) work.push_back(v);
    for (std::size_t qi = 0; qi < work.size(); qi++) {
        int v = work[qi];
        if (!state.undecided_vertex(v) || state.degree(v) > 1) continue;
        if (state.degree(v) == 0) {
            state.set_status(v, kOut, kRed);
            out.vertices_reduced++;
            continue;
        }
        int u = state.undecided_neighbors(v)[0];
        state.set_status(v, kOut, kRed);
        state.set_status(u, kIn, kRed);
        out.vertices_reduced += 2;
        state.for_neighbors(u, [&](int w) {
            if (state.undecided_vertex(w) && state.degree(w) <= 1) work.push_back(w);
        });
    }
    out.reduced_any = out.vertices_reduced > 0;
    out.elapsed = timer.elapsed();
    return out;
}

ReductionOutcome apply_dominance(SolverState& state) {
    Timer timer;
    ReductionOutcome out;
    bool fired = true;
    while (fired) {
        fired = false;
        for (int v = 0; v < state.total_vertices(); v++) {
            if (!state.undecided_vertex(v) || state.degree(v) == 0) continue;
            auto closed_v = state.closed_undecided_neighborhood(v);
            for (int w : state.undecided_neighbors(v)) {
                if (state.degree(w) < state.degree(v)) continue;
                if (subset_of(closed_v, state.closed_undecided_neighborhood(w))) {
                    state.set_status(w, kIn, kRed);
                    out.vertices_reduced++;
                    fired = true;
                    break;  // v's neighborhood changed; the next pass rechecks it
                }
            }
        }
    }
    // Vertices whose edges all got covered above are free to stay out.
    for (int v = 0; v < state.total_vertices(); v++)
        if (state.undecided_vertex(v) && state.degree(v) == 0 && out.vertices_reduced > 0) {
            state.set_status(v, kOut, kRed);
            out.vertices_reduced++;
        }
    out.reduced_any = out.vertices_reduced > 0;
    out.elapsed = timer.elapsed();
    return out;
}

ReductionOutcome apply_fold2(SolverState& state) {
    Timer timer;
    ReductionOutcome out;
    for (int v = 0; v < state.total_vertices(); v++) {
        if (!state.undecided_vertex(v) || state.degree(v) != 2) continue;
        auto nb = state.undecided_neighbors(v);
        int u = nb[0], w = nb[1];
        if (state.adjacent(u, w)) {
            // Adjacent neighbors of a degree-2 vertex both dominate it.
            state.set_status(u, kIn, kRed);
            state.set_status(w, kIn, kRed);
            state.set_status(v, kOut, kRed);
            out.vertices_reduced += 3;
            continue;
        }
        std::vector<int> merged;
        for (int x : state.undecided_neighbors(u))
            if (x != v && x != w) merged.push_back(x);
        for (int x : state.undecided_neighbors(w))
            if (x != v && x != u) merged.push_back(x);
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        state.set_status(v, kOut, kRed);
        state.set_status(u, kOut, kRed);
        state.set_status(w, kOut, kRed);
        state.add_cover_offset(1);
        int z = state.add_overlay_vertex(std::move(merged));
        state.push_unfold(Fold2Record{v, u, w, z});
        out.vertices_reduced += 3;
    }
    out.reduced_any = out.vertices_reduced > 0;
    out.elapsed = timer.elapsed();
    return out;
}

ReductionOutcome apply_twin(SolverState& state) {
    Timer timer;
    ReductionOutcome out;
    bool fired = true;
    while (fired) {
        fired = false;
        std::map<std::vector<int>, int> by_neighborhood;
        for (int v = 0; v < state.total_vertices() && !fired; v++) {
            if (!state.undecided_vertex(v) || state.degree(v) != 3) continue;
            auto nb = state.undecided_neighbors(v);
            std::sort(nb.begin(), nb.end());
            auto [it, inserted] = by_neighborhood.try_emplace(nb, v);
            if (inserted) continue;
            int first = it->second;
            // Twins found: `first` and v share all three neighbors and are
            // never adjacent (a shared neighborhood cannot contain either).
            bool internal_edge = state.adjacent(nb[0], nb[1]) || state.adjacent(nb[0], nb[2]) ||
                                 state.adjacent(nb[1], nb[2]);
            if (internal_edge) {
                for (int x : nb) state.set_status(x, kIn, kRed);
                state.set_status(first, kOut, kRed);
                state.set_status(v, kOut, kRed);
                out.vertices_reduced += 5;
            } else {
                std::vector<int> merged;
                for (int x : nb)
                    for (int y : state.undecided_neighbors(x))
                        if (y != first && y != v) merged.push_back(y);
                std::sort(merged.begin(), merged.end());
                merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
                state.set_status(first, kOut, kRed);
                state.set_status(v, kOut, kRed);
                for (int x : nb) state.set_status(x, kOut, kRed);
                state.add_cover_offset(2);
                int z = state.add_overlay_vertex(std::move(merged));
                state.push_unfold(TwinRecord{first, v, {nb[0], nb[1], nb[2]}, z});
                out.vertices_reduced += 5;
            }
            fired = true;
        }
    }
    out.reduced_any = out.vertices_reduced > 0;
    out.elapsed = timer.elapsed();
    return out;
}

ReductionOutcome apply_lp(SolverState& state, const LpSolution& lp) {
    Timer timer;
    if (!lp.fresh(state)) throw std::logic_error("apply_lp: stale LP solution");
    ReductionOutcome out;
    for (std::size_t i = 0; i < lp.vertices.size(); i++) {
        if (lp.x2[i] == 2) {
            state.set_status(lp.vertices[i], kIn, kRed);
            out.vertices_reduced++;
        } else if (lp.x2[i] == 0) {
            state.set_status(lp.vertices[i], kOut, kRed);
            out.vertices_reduced++;
        }
    }
    out.reduced_any = out.vertices_reduced > 0;
    out.elapsed = timer.elapsed();
    return out;
}

namespace {

// The confinement search. S starts as {v}; each round looks for a neighbor
// u of S with exactly one S-neighbor and the fewest outside-N[S] neighbors.
// An empty outside set proves v unconfined; a singleton extends S.
bool vertex_unconfined(const SolverState& state, int v, std::vector<char>& in_s,
                       std::vector<char>& in_closed, std::vector<int>& touched) {
    touched.clear();
    auto mark_s = [&](int s) {
        if (!in_s[s]) {
            in_s[s] = 1;
            if (!in_closed[s]) touched.push_back(s);
            in_closed[s] = 1;
        }
        state.for_neighbors(s, [&](int u) {
            if (state.undecided_vertex(u) && !in_closed[u]) {
                in_closed[u] = 1;
                touched.push_back(u);
            }
        });
    };
    mark_s(v);
    bool result = false;
    for (;;) {
        int best_u = -1, best_extra = -1, best_count = 0;
        // Candidates are the current N(S) members in ascending id.
        std::vector<int> frontier;
        for (int u : touched)
            if (!in_s[u]) frontier.push_back(u);
        std::sort(frontier.begin(), frontier.end());
        for (int u : frontier) {
            int s_neighbors = 0, extra = -1, extra_count = 0;
            state.for_neighbors(u, [&](int w) {
                if (!state.undecided_vertex(w)) return;
                if (in_s[w]) s_neighbors++;
                else if (!in_closed[w]) {
                    extra_count++;
                    if (extra < 0) extra = w;
                }
            });
            if (s_neighbors != 1) continue;
            if (best_u < 0 || extra_count < best_count) {
                best_u = u;
                best_extra = extra;
                best_count = extra_count;
                if (best_count == 0) break;
            }
        }
        if (best_u < 0 || best_count > 1) break;
        if (best_count == 0) {
            result = true;
            break;
        }
        mark_s(best_extra);
    }
    for (int u : touched) {
        in_s[u] = 0;
        in_closed[u] = 0;
    }
    return result;
}

}  // namespace

bool is_unconfined(const SolverState& state, int v) {
    std::vector<char> in_s(state.total_vertices() + 1, 0);
    std::vector<char> in_closed(state.total_vertices() + 1, 0);
    std::vector<int> touched;
    return vertex_unconfined(state, v, in_s, in_closed, touched);
}

ReductionOutcome apply_unconfined(SolverState& state) {
    Timer timer;
    ReductionOutcome out;
    std::vector<char> in_s(state.total_vertices() + 1, 0);
    std::vector<char> in_closed(state.total_vertices() + 1, 0);
    std::vector<int> touched;
    bool fired = true;
    while (fired) {
        fired = false;
        for (int v = 0; v < state.total_vertices(); v++) {
            if (!state.undecided_vertex(v)) continue;
            if (vertex_unconfined(state, v, in_s, in_closed, touched)) {
                state.set_status(v, kIn, kRed);
                out.vertices_reduced++;
                fired = true;
            }
        }
    }
    out.reduced_any = out.vertices_reduced > 0;
    out.elapsed = timer.elapsed();
    return out;
}

ReductionOutcome apply_funnel(SolverState& state) {
    Timer timer;
    ReductionOutcome out;
    for (int v = 0; v < state.total_vertices(); v++) {
        if (!state.undecided_vertex(v) || state.degree(v) == 0) continue;
        auto nb = state.undecided_neighbors(v);
        std::sort(nb.begin(), nb.end());
        int chosen_w = -1;
        for (int w : nb) {
            bool clique = true;
            for (std::size_t i = 0; i < nb.size() && clique; i++) {
                if (nb[i] == w) continue;
                for (std::size_t j = i + 1; j < nb.size(); j++) {
                    if (nb[j] == w) continue;
                    if (!state.adjacent(nb[i], nb[j])) {
                        clique = false;
                        break;
                    }
                }
            }
            if (clique) {
                chosen_w = w;
                break;
            }
        }
        if (chosen_w < 0) continue;
        int w = chosen_w;
        auto nw = state.undecided_neighbors(w);
        std::sort(nw.begin(), nw.end());
        std::vector<int> common, nv_minus, nw_minus;
        for (int x : nb)
            if (x != w) {
                if (std::binary_search(nw.begin(), nw.end(), x)) common.push_back(x);
                else nv_minus.push_back(x);
            }
        for (int x : nw)
            if (x != v && !std::binary_search(nb.begin(), nb.end(), x)) nw_minus.push_back(x);
        for (int c : common) {
            state.set_status(c, kIn, kRed);
            out.vertices_reduced++;
        }
        state.set_status(v, kOut, kRed);
        state.set_status(w, kOut, kRed);
        out.vertices_reduced += 2;
        state.add_cover_offset(1);
        for (int s : nv_minus)
            for (int t : nw_minus) state.add_overlay_edge(s, t);
        state.push_unfold(FunnelRecord{v, w, common, nv_minus, nw_minus});
    }
    out.reduced_any = out.vertices_reduced > 0;
    out.elapsed = timer.elapsed();
    return out;
}

ReductionOutcome apply_desk(SolverState& state) {
    Timer timer;
    ReductionOutcome out;
    for (int v1 = 0; v1 < state.total_vertices(); v1++) {
        if (!state.undecided_vertex(v1) || state.degree(v1) < 3) continue;
        auto n1 = state.undecided_neighbors(v1);
        std::sort(n1.begin(), n1.end());
        bool applied = false;
        for (std::size_t a = 0; a < n1.size() && !applied; a++) {
            int v2 = n1[a];
            if (state.degree(v2) < 3) continue;
            for (std::size_t b = a + 1; b < n1.size() && !applied; b++) {
                int v4 = n1[b];
                if (state.degree(v4) < 3 || state.adjacent(v2, v4)) continue;
                // Third corner: shared neighbor of v2 and v4, not adjacent to v1.
                auto n2 = state.undecided_neighbors(v2);
                std::sort(n2.begin(), n2.end());
                for (int v3 : n2) {
                    if (v3 == v1 || state.degree(v3) < 3) continue;
                    if (!state.adjacent(v3, v4) || state.adjacent(v1, v3)) continue;
                    std::array<int, 4> cyc{v1, v2, v3, v4};
                    auto external = [&](int p, int q) {
                        std::vector<int> ext;
                        for (int c : {p, q})
                            for (int x : state.undecided_neighbors(c))
                                if (x != cyc[0] && x != cyc[1] && x != cyc[2] && x != cyc[3])
                                    ext.push_back(x);
                        std::sort(ext.begin(), ext.end());
                        ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
                        return ext;
                    };
                    std::vector<int> n13 = external(v1, v3);
                    std::vector<int> n24 = external(v2, v4);
                    if (n13.size() > 2 || n24.size() > 2) continue;
                    std::vector<int> inter;
                    std::set_intersection(n13.begin(), n13.end(), n24.begin(), n24.end(),
                                          std::back_inserter(inter));
                    if (!inter.empty()) continue;
                    for (int c : cyc) {
                        state.set_status(c, kOut, kRed);
                        out.vertices_reduced++;
                    }
                    state.add_cover_offset(2);
                    for (int s : n13)
                        for (int t : n24) state.add_overlay_edge(s, t);
                    state.push_unfold(DeskRecord{cyc, n13, n24});
                    applied = true;
                    break;
                }
            }
        }
    }
    out.reduced_any = out.vertices_reduced > 0;
    out.elapsed = timer.elapsed();
    return out;
}

ReduceStatus reduce(SolverState& state, const ReductionConfig& config,
                    const ReduceHooks& hooks) {
    const int n = state.base_vertices();
    auto run = [&](ReductionKind kind) {
        ReductionOutcome outcome;
        if (kind == ReductionKind::Lp) {
            Timer timer;
            LpSolution lp = solve_lp_relaxation(state);
            outcome = apply_lp(state, lp);
            outcome.elapsed = timer.elapsed();  // include the relaxation itself
            if (hooks.lp_cache) {
                if (outcome.reduced_any)
                    hooks.lp_cache->reset();  // stale the moment vertices moved
                else
                    *hooks.lp_cache = std::move(lp);
            }
        } else {
            switch (kind) {
                case ReductionKind::Deg1: outcome = apply_deg1(state); break;
                case ReductionKind::Dominance: outcome = apply_dominance(state); break;
                case ReductionKind::Fold2: outcome = apply_fold2(state); break;
                case ReductionKind::Twin: outcome = apply_twin(state); break;
                case ReductionKind::Unconfined: outcome = apply_unconfined(state); break;
                case ReductionKind::Funnel: outcome = apply_funnel(state); break;
                case ReductionKind::Desk: outcome = apply_desk(state); break;
                case ReductionKind::Lp: break;
            }
        }
        if (hooks.on_outcome) hooks.on_outcome(kind, outcome);
        return outcome.reduced_any;
    };

    for (;;) {
        if (state.undecided() == 0) return ReduceStatus::ReductionCut;
        if (config.enabled(ReductionKind::Deg1) && run(ReductionKind::Deg1)) continue;
        if (state.undecided() == 0) return ReduceStatus::ReductionCut;
        if (static_cast<double>(n) * config.shrink >= static_cast<double>(state.undecided())) {
            if (hooks.component_solve) {
                hooks.component_solve(state);
                return ReduceStatus::ReductionCut;
            }
        }
        bool fired = false;
        for (ReductionKind kind :
             {ReductionKind::Dominance, ReductionKind::Unconfined, ReductionKind::Lp,
              ReductionKind::Fold2, ReductionKind::Twin, ReductionKind::Funnel,
              ReductionKind::Desk}) {
            if (config.enabled(kind) && run(kind)) {
                fired = true;
                break;
            }
        }
        if (!fired) return ReduceStatus::Alive;
    }
}

}  // namespace vcbr
