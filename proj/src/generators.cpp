#include "vcbr/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <stdexcept>

#include "vcbr/rng.hpp"

namespace vcbr {

namespace {

// Endpoint choice among candidates sorted ascending by (degree, id):
// deg_var 0 takes the lowest bucket, 1 is uniform, below/above 1 biases the
// draw toward low/high degrees via u^(1/deg_var).
int pick_index(int count, double deg_var, Rng& rng) {
    if (count <= 1 || deg_var <= 0.0) return 0;
    double u = rng.unit();
    int idx = static_cast<int>(static_cast<double>(count) * std::pow(u, 1.0 / deg_var));
    return std::min(idx, count - 1);
}

struct BlgBuild {
    int n;
    std::vector<std::set<int>> adj;
    std::vector<int> degree;
    std::int64_t edges = 0;

    explicit BlgBuild(int n_) : n(n_), adj(n_), degree(n_, 0) {}

    bool adjacent(int u, int v) const { return adj[u].count(v) > 0; }
    void add_edge(int u, int v) {
        adj[u].insert(v);
        adj[v].insert(u);
        degree[u]++;
        degree[v]++;
        edges++;
    }
    std::vector<int> sorted_by_degree(const std::vector<int>& vs) const {
        std::vector<int> out = vs;
        std::sort(out.begin(), out.end(), [&](int a, int b) {
            return degree[a] != degree[b] ? degree[a] < degree[b] : a < b;
        });
        return out;
    }
};

}  // namespace

Graph generate_blg(const BlgParams& params) {
    int n = params.n;
    if (n < 1) throw std::runtime_error("blg: need at least one vertex");
    double tree_floor = 2.0 * (n - 1) / static_cast<double>(n);
    if (params.avg_degree + 1e-9 < tree_floor)
        throw std::runtime_error("blg: average degree below the spanning tree floor");
    std::int64_t target = std::llround(params.avg_degree * n / 2.0);
    int min_deg = params.min_deg.value_or(0);
    int max_deg = params.max_deg.value_or(n - 1);
    if (min_deg > params.avg_degree || params.avg_degree > max_deg)
        throw std::runtime_error("blg: average degree outside [min_deg, max_deg]");
    if (static_cast<std::int64_t>(max_deg) * n < 2 * target)
        throw std::runtime_error("blg: max degree too small for the requested edges");
    if (static_cast<std::int64_t>(min_deg) * n > 2 * target)
        throw std::runtime_error("blg: min degree too large for the requested edges");
    if (n > 1 && max_deg < (n == 2 ? 1 : 2))
        throw std::runtime_error("blg: max degree too small for a spanning tree");

    Rng rng(params.seed);
    BlgBuild b(n);

    // Random spanning tree: random insertion order, each vertex attaching to
    // an earlier one chosen by the degree-bias rule.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; i--) std::swap(perm[i], perm[rng.below(i + 1)]);
    std::vector<int> placed;
    placed.push_back(perm[0]);
    for (int i = 1; i < n; i++) {
        std::vector<int> eligible;
        for (int v : placed)
            if (b.degree[v] < max_deg) eligible.push_back(v);
        if (eligible.empty()) throw std::runtime_error("blg: spanning tree hit the degree cap");
        eligible = b.sorted_by_degree(eligible);
        int anchor = eligible[pick_index(static_cast<int>(eligible.size()), params.deg_var, rng)];
        b.add_edge(perm[i], anchor);
        placed.push_back(perm[i]);
    }

    auto eligible_vertices = [&]() {
        std::vector<int> out;
        for (int v = 0; v < n; v++)
            if (b.degree[v] < max_deg) out.push_back(v);
        return b.sorted_by_degree(out);
    };
    auto fallback_pair = [&](const std::vector<int>& sorted) -> std::pair<int, int> {
        for (std::size_t i = 0; i < sorted.size(); i++)
            for (std::size_t j = i + 1; j < sorted.size(); j++)
                if (!b.adjacent(sorted[i], sorted[j])) return {sorted[i], sorted[j]};
        throw std::runtime_error("blg: no feasible vertex pair left");
    };

    // Vertices still under the minimum degree get picked unconditionally.
    for (;;) {
        std::vector<int> below;
        for (int v = 0; v < n; v++)
            if (b.degree[v] < min_deg) below.push_back(v);
        if (below.empty()) break;
        if (b.edges >= target)
            throw std::runtime_error("blg: min degree unreachable within the edge budget");
        below = b.sorted_by_degree(below);
        int u = below[0];
        std::vector<int> partners;
        for (int v : below)
            if (v != u && !b.adjacent(u, v) && b.degree[v] < max_deg) partners.push_back(v);
        if (partners.empty())
            for (int v = 0; v < n; v++)
                if (v != u && !b.adjacent(u, v) && b.degree[v] < max_deg) partners.push_back(v);
        if (partners.empty()) throw std::runtime_error("blg: min degree unreachable");
        partners = b.sorted_by_degree(partners);
        int v = partners[pick_index(static_cast<int>(partners.size()), params.deg_var, rng)];
        b.add_edge(u, v);
    }

    // The partner pool excludes the first endpoint's neighbors up front;
    // with a strong high-degree bias, rejection sampling would stall on the
    // saturated top clique and push every edge to the fallback instead.
    while (b.edges < target) {
        std::vector<int> sorted = eligible_vertices();
        if (sorted.size() < 2) throw std::runtime_error("blg: degree caps saturated early");
        int u = sorted[pick_index(static_cast<int>(sorted.size()), params.deg_var, rng)];
        std::vector<int> partners;
        for (int v : sorted)
            if (v != u && !b.adjacent(u, v)) partners.push_back(v);
        if (partners.empty()) {
            auto [x, y] = fallback_pair(sorted);
            b.add_edge(x, y);
            continue;
        }
        int v = partners[pick_index(static_cast<int>(partners.size()), params.deg_var, rng)];
        b.add_edge(u, v);
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(b.edges);
    for (int v = 0; v < n; v++)
        for (int u : b.adj[v])
            if (v < u) edges.emplace_back(v, u);
    return Graph(n, edges);
}

Graph generate_geometric(const GeoParams& params) {
    int n = params.n;
    if (n < 1) throw std::runtime_error("geo: need at least one vertex");
    std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (params.target_edges < 0 || params.target_edges > max_edges)
        throw std::runtime_error("geo: target edge count out of range");

    Rng rng(params.seed);
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; i++) {
        xs[i] = rng.unit();
        ys[i] = rng.unit();
    }
    double d2 = 0.0;
    if (n > 1)
        d2 = 2.0 * static_cast<double>(params.target_edges) /
             (M_PI * static_cast<double>(n) * static_cast<double>(n - 1));

    auto dist2 = [&](int i, int j) {
        double dx = std::fabs(xs[i] - xs[j]);
        double dy = std::fabs(ys[i] - ys[j]);
        if (params.wraparound) {
            dx = std::min(dx, 1.0 - dx);
            dy = std::min(dy, 1.0 - dy);
        }
        return dx * dx + dy * dy;
    };

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };

    std::vector<std::pair<int, int>> edges;
    struct CrossPair {
        double d2;
        int i, j;
    };
    std::vector<CrossPair> pairs;
    pairs.reserve(static_cast<std::size_t>(max_edges));
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) {
            double dd = dist2(i, j);
            if (params.target_edges > 0 && dd <= d2) {
                edges.emplace_back(i, j);
                int a = find(i), b = find(j);
                if (a != b) parent[a] = b;
            } else {
                pairs.push_back({dd, i, j});
            }
        }

    // Connectivity floor: link the closest pair of points that still sit in
    // different components, repeating until one component remains.
    std::sort(pairs.begin(), pairs.end(), [](const CrossPair& a, const CrossPair& b) {
        return a.d2 != b.d2 ? a.d2 < b.d2 : a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    for (const auto& p : pairs) {
        int a = find(p.i), b = find(p.j);
        if (a == b) continue;
        parent[a] = b;
        edges.emplace_back(p.i, p.j);
    }
    return Graph(n, edges);
}

std::string blg_name(const BlgParams& params) {
    char buf[128];
    auto fmt_num = [](double x, int width) {
        char tmp[32];
        if (std::fabs(x - std::llround(x)) < 1e-9)
            std::snprintf(tmp, sizeof(tmp), "%0*lld", width, std::llround(x));
        else
            std::snprintf(tmp, sizeof(tmp), "%g", x);
        return std::string(tmp);
    };
    std::snprintf(buf, sizeof(buf), "blg-%d_%s_%s_%sd%s", params.n,
                  fmt_num(params.avg_degree, 3).c_str(), fmt_num(params.deg_var, 2).c_str(),
                  fmt_num(params.min_deg.value_or(0), 2).c_str(),
                  fmt_num(params.max_deg.value_or(params.n - 1), 3).c_str());
    return buf;
}

std::string geo_name(const GeoParams& params) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s-%05lld-%llu", params.wraparound ? "W" : "G",
                  static_cast<long long>(params.target_edges),
                  static_cast<unsigned long long>(params.seed));
    return buf;
}

}  // namespace vcbr
