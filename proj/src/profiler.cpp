#include "vcbr/profiler.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "vcbr/rng.hpp"

namespace vcbr {

double nad_from(int n, double avg_degree) {
    if (n < 1) throw std::runtime_error("nad: empty graph");
    if (avg_degree <= 20.0) return avg_degree;
    return avg_degree * 200.0 / static_cast<double>(n);
}

double nad(const Graph& g) {
    return nad_from(g.num_vertices(),
                    2.0 * static_cast<double>(g.num_edges()) / g.num_vertices());
}

double spread_from(const DegreeStats& stats) {
    double t = std::max(stats.p95, 1);
    double b = std::max(stats.p05, 1);
    return t / b;
}

double spread(const Graph& g) { return spread_from(degree_stats(g)); }

InstanceProfile compute_profile(const Graph& g, bool with_oct, std::uint64_t seed) {
    if (g.num_vertices() < 1) throw std::runtime_error("profile: empty graph");
    InstanceProfile p;
    p.n = g.num_vertices();
    p.m = g.num_edges();
    p.degrees = degree_stats(g);
    p.avg_degree = 2.0 * static_cast<double>(p.m) / p.n;
    p.nad = nad_from(p.n, p.avg_degree);
    p.spread = spread_from(p.degrees);
    if (with_oct)
        p.oct_estimate = static_cast<double>(estimate_oct(g, seed).size()) / p.n;
    return p;
}

InstanceProfile profile_from_degrees(const std::vector<int>& degrees) {
    InstanceProfile p;
    p.n = static_cast<int>(degrees.size());
    std::int64_t sum = std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
    if (sum % 2 != 0) throw std::runtime_error("profile: odd degree sum");
    p.m = sum / 2;
    p.degrees = degree_stats_from_degrees(degrees);
    p.avg_degree = static_cast<double>(sum) / p.n;
    p.nad = nad_from(p.n, p.avg_degree);
    p.spread = spread_from(p.degrees);
    return p;
}

Recommendation recommend_config(const InstanceProfile& profile) {
    Recommendation rec;
    if (profile.spread <= 4.0 && profile.nad > 20.0) {
        rec.config_name = "None";
        rec.hypothesis = 1;
    } else if (profile.spread >= 16.0 && profile.nad >= 16.0) {
        rec.config_name = "r0_l1";
        rec.hypothesis = 2;
    } else {
        rec.config_name = "DF2";
        rec.hypothesis = 3;
    }
    if (profile.oct_estimate && *profile.oct_estimate < 0.20) rec.add_lp = true;
    rec.hardness_flag =
        profile.avg_degree >= 5.0 && profile.avg_degree <= 20.0 && profile.spread <= 4.0;
    return rec;
}

std::vector<int> estimate_oct(const Graph& g, std::uint64_t seed) {
    int n = g.num_vertices();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    for (int i = n - 1; i > 0; i--) std::swap(order[i], order[rng.below(i + 1)]);

    // BFS order per component, starting points taken from the shuffle.
    std::vector<int> bfs;
    bfs.reserve(n);
    std::vector<char> seen(n, 0);
    for (int s : order) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::size_t head = bfs.size();
        bfs.push_back(s);
        while (head < bfs.size()) {
            int v = bfs[head++];
            for (int u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    bfs.push_back(u);
                }
        }
    }

    constexpr int kNone = -1, kBanished = 2;
    std::vector<int> color(n, kNone);
    for (int v : bfs) {
        bool has[2] = {false, false};
        for (int u : g.neighbors(v))
            if (color[u] == 0 || color[u] == 1) has[color[u]] = true;
        if (has[0] && has[1])
            color[v] = kBanished;
        else
            color[v] = has[0] ? 1 : 0;
    }
    // Re-insertion: a banished vertex rejoins when its kept neighbors agree.
    for (int v = 0; v < n; v++) {
        if (color[v] != kBanished) continue;
        bool has[2] = {false, false};
        for (int u : g.neighbors(v))
            if (color[u] == 0 || color[u] == 1) has[color[u]] = true;
        if (!(has[0] && has[1])) color[v] = has[0] ? 1 : 0;
    }
    std::vector<int> banished;
    for (int v = 0; v < n; v++)
        if (color[v] == kBanished) banished.push_back(v);
    // The residual must be properly two-colored.
    for (int v = 0; v < n; v++) {
        if (color[v] == kBanished) continue;
        for (int u : g.neighbors(v))
            if (color[u] == color[v])
                throw std::logic_error("estimate_oct: residual not bipartite");
    }
    return banished;
}

std::string profile_text(const InstanceProfile& p, const Recommendation* rec) {
    char buf[512];
    std::string out;
    std::snprintf(buf, sizeof(buf),
                  "n        %d\nm        %lld\nmin      %d\nbottom   %d\nmed      %d\n"
                  "mean     %.1f\ntop      %d\nmax      %d\nstdev    %.1f\nspread   %.1f\n"
                  "nad      %.2f\n",
                  p.n, static_cast<long long>(p.m), p.degrees.min, p.degrees.p05,
                  p.degrees.median, p.degrees.mean, p.degrees.p95, p.degrees.max,
                  p.degrees.stdev, p.spread, p.nad);
    out += buf;
    if (p.oct_estimate) {
        std::snprintf(buf, sizeof(buf), "oct_est  %.3f\n", *p.oct_estimate);
        out += buf;
    }
    if (rec) {
        std::snprintf(buf, sizeof(buf), "recommended_config %s (hypothesis %d)\n",
                      rec->config_name.c_str(), rec->hypothesis);
        out += buf;
        if (rec->add_lp) out += "suggest_lp yes (estimated oct below 20%)\n";
        if (rec->hardness_flag) out += "hardness expect a hard instance (sparse, low spread)\n";
    }
    return out;
}

std::string profile_csv_header() {
    return "instance,n,m,min,bottom,med,mean,top,max,stdev,spread,nad";
}

std::string profile_csv_row(const std::string& name, const InstanceProfile& p) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), "%s,%d,%lld,%d,%d,%d,%.1f,%d,%d,%.1f,%.1f,%.2f",
                  name.c_str(), p.n, static_cast<long long>(p.m), p.degrees.min, p.degrees.p05,
                  p.degrees.median, p.degrees.mean, p.degrees.p95, p.degrees.max,
                  p.degrees.stdev, p.spread, p.nad);
    return buf;
}

}  // namespace vcbr
