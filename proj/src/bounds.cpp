#include "vcbr/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace vcbr {

int LpSolution::value2() const {
    int v = 0;
    for (auto b : x2) v += b;
    return v;
}

namespace {

// Index-space view of the undecided subgraph.
struct Subgraph {
    std::vector<int> verts;
    std::vector<std::vector<int>> adj;  // ascending
};

Subgraph undecided_subgraph(const SolverState& state) {
    Subgraph s;
    s.verts = state.undecided_vertices();
    std::vector<int> index(state.total_vertices(), -1);
    for (int i = 0; i < static_cast<int>(s.verts.size()); i++) index[s.verts[i]] = i;
    s.adj.resize(s.verts.size());
    for (int i = 0; i < static_cast<int>(s.verts.size()); i++) {
        state.for_neighbors(s.verts[i], [&](int u) {
            if (index[u] >= 0) s.adj[i].push_back(index[u]);
        });
        std::sort(s.adj[i].begin(), s.adj[i].end());
    }
    return s;
}

constexpr int kInf = std::numeric_limits<int>::max();

// Hopcroft-Karp on the bipartite double cover: left i may match right j for
// every subgraph edge (i,j). Deterministic: ascending vertex and adjacency
// order throughout.
struct HopcroftKarp {
    const Subgraph& g;
    int k;
    std::vector<int> mate_l, mate_r, dist;

    explicit HopcroftKarp(const Subgraph& sub)
        : g(sub), k(static_cast<int>(sub.verts.size())), mate_l(k, -1), mate_r(k, -1), dist(k) {}

    bool bfs() {
        std::vector<int> queue;
        queue.reserve(k);
        for (int i = 0; i < k; i++) {
            if (mate_l[i] < 0) {
                dist[i] = 0;
                queue.push_back(i);
            } else {
                dist[i] = kInf;
            }
        }
        bool found = false;
        for (std::size_t qi = 0; qi < queue.size(); qi++) {
            int i = queue[qi];
            for (int j : g.adj[i]) {
                int w = mate_r[j];
                if (w < 0) {
                    found = true;
                } else if (dist[w] == kInf) {
                    dist[w] = dist[i] + 1;
                    queue.push_back(w);
                }
            }
        }
        return found;
    }

    bool dfs(int i) {
        for (int j : g.adj[i]) {
            int w = mate_r[j];
            if (w < 0 || (dist[w] == dist[i] + 1 && dfs(w))) {
                mate_l[i] = j;
                mate_r[j] = i;
                return true;
            }
        }
        dist[i] = kInf;
        return false;
    }

    int run() {
        int size = 0;
        while (bfs()) {
            for (int i = 0; i < k; i++)
                if (mate_l[i] < 0 && dfs(i)) size++;
        }
        return size;
    }
};

}  // namespace

LpSolution solve_lp_relaxation(const SolverState& state) {
    Subgraph sub = undecided_subgraph(state);
    int k = static_cast<int>(sub.verts.size());
    if (k == 0) throw std::runtime_error("lp: no undecided vertices");

    HopcroftKarp hk(sub);
    int matching = hk.run();

    // König: alternating reachability from the free left copies. The cover
    // is (L minus reached) plus (R reached); x is the symmetric combination.
    std::vector<char> reach_l(k, 0), reach_r(k, 0);
    std::vector<int> queue;
    for (int i = 0; i < k; i++)
        if (hk.mate_l[i] < 0) {
            reach_l[i] = 1;
            queue.push_back(i);
        }
    for (std::size_t qi = 0; qi < queue.size(); qi++) {
        int i = queue[qi];
        for (int j : sub.adj[i]) {
            if (j == hk.mate_l[i] || reach_r[j]) continue;
            reach_r[j] = 1;
            int w = hk.mate_r[j];
            if (w >= 0 && !reach_l[w]) {
                reach_l[w] = 1;
                queue.push_back(w);
            }
        }
    }

    LpSolution lp;
    lp.vertices = sub.verts;
    lp.mate = hk.mate_l;
    lp.matching_size = matching;
    lp.state_version = state.version();
    lp.x2.resize(k);
    for (int i = 0; i < k; i++)
        lp.x2[i] = static_cast<std::uint8_t>((reach_l[i] ? 0 : 1) + (reach_r[i] ? 1 : 0));
    assert(lp.value2() == matching);

    // Rounding pass over the matching cycles of the half-valued kernel.
    // Whole even cycles of length >= 4 may flip to alternating 0/1 when no
    // incident edge loses feasibility; everything else stays half. Two-cycles
    // are never rounded: the choice there is an arbitrary tie and persistency
    // is all the later stages rely on.
    std::vector<char> seen(k, 0);
    std::vector<int> cycle;
    for (int s = 0; s < k; s++) {
        if (seen[s] || lp.x2[s] != 1) continue;
        cycle.clear();
        int cur = s;
        bool closed = true;
        while (!seen[cur]) {
            seen[cur] = 1;
            cycle.push_back(cur);
            cur = lp.mate[cur];
            if (cur < 0 || lp.x2[cur] != 1) {
                closed = false;
                break;
            }
        }
        if (!closed || cur != s) continue;
        if (cycle.size() < 4 || cycle.size() % 2 != 0) continue;
        for (int phase = 0; phase < 2; phase++) {
            std::vector<std::uint8_t> proposed = lp.x2;
            for (std::size_t t = 0; t < cycle.size(); t++)
                proposed[cycle[t]] = (t % 2 == static_cast<std::size_t>(phase)) ? 0 : 2;
            bool feasible = true;
            for (std::size_t t = 0; t < cycle.size() && feasible; t++) {
                int i = cycle[t];
                if (proposed[i] != 0) continue;
                for (int j : sub.adj[i])
                    if (proposed[i] + proposed[j] < 2) {
                        feasible = false;
                        break;
                    }
            }
            if (feasible) {
                lp.x2 = std::move(proposed);
                break;
            }
        }
    }
    assert(lp.value2() == matching);
    return lp;
}

int clique_lower_bound(const SolverState& state) {
    std::vector<int> verts = state.undecided_vertices();
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        int da = state.degree(a), db = state.degree(b);
        return da != db ? da < db : a < b;
    });
    std::vector<std::vector<int>> cliques;
    std::vector<char> mark(state.total_vertices(), 0);
    for (int v : verts) {
        state.for_neighbors(v, [&](int u) {
            if (state.undecided_vertex(u)) mark[u] = 1;
        });
        int best = -1;
        std::size_t best_size = 0;
        for (int c = 0; c < static_cast<int>(cliques.size()); c++) {
            const auto& cl = cliques[c];
            if (cl.size() <= best_size) continue;
            bool inside = true;
            for (int u : cl)
                if (!mark[u]) {
                    inside = false;
                    break;
                }
            if (inside) {
                best = c;
                best_size = cl.size();
            }
        }
        if (best >= 0)
            cliques[best].push_back(v);
        else
            cliques.emplace_back(1, v);
        state.for_neighbors(v, [&](int u) { mark[u] = 0; });
    }
    int bound = 0;
    for (const auto& cl : cliques) bound += static_cast<int>(cl.size()) - 1;
    return bound;
}

int lp_lower_bound(const LpSolution& lp) { return (lp.value2() + 1) / 2; }

int cycle_lower_bound(const SolverState& state, const LpSolution& lp) {
    if (!lp.fresh(state))
        throw std::logic_error("cycle bound: stale LP solution");
    int k = static_cast<int>(lp.vertices.size());
    int bound = 0;
    std::vector<char> seen(k, 0);
    for (int i = 0; i < k; i++)
        if (lp.x2[i] == 2) bound++;
    for (int s = 0; s < k; s++) {
        if (seen[s] || lp.x2[s] != 1) continue;
        int len = 0;
        int cur = s;
        bool closed = true;
        while (!seen[cur]) {
            seen[cur] = 1;
            len++;
            cur = lp.mate[cur];
            if (cur < 0 || lp.x2[cur] != 1) {
                closed = false;
                break;
            }
        }
        if (closed && cur == s) bound += (len + 1) / 2;
    }
    return bound;
}

std::pair<int, LowerBoundKind> best_lower_bound(const SolverState& state,
                                                const ReductionConfig& config,
                                                const LpSolution* lp, BoundTimers* timers) {
    using clock = std::chrono::steady_clock;
    int best = 0;
    LowerBoundKind kind = LowerBoundKind::Trivial;
    if (config.clique_lb) {
        auto t0 = clock::now();
        int b = clique_lower_bound(state);
        if (timers)
            timers->clique_ns +=
                std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0).count();
        if (b >= best) {
            best = b;
            kind = LowerBoundKind::Clique;
        }
    }
    bool lp_usable = lp != nullptr && lp->fresh(state);
    if (config.lp_lb && lp_usable) {
        int b = lp_lower_bound(*lp);
        if (b >= best) {
            best = b;
            kind = LowerBoundKind::Lp;
        }
    }
    if (config.cycle_lb && lp_usable) {
        auto t0 = clock::now();
        int b = cycle_lower_bound(state, *lp);
        if (timers)
            timers->cycle_ns +=
                std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0).count();
        if (b >= best) {
            best = b;
            kind = LowerBoundKind::Cycle;
        }
    }
    return {best, kind};
}

}  // namespace vcbr
