#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vcbr/graph.hpp"

namespace vcbr {

struct InstanceProfile {
    int n = 0;
    std::int64_t m = 0;
    DegreeStats degrees;
    double avg_degree = 0.0;
    double nad = 0.0;
    double spread = 0.0;
    std::optional<double> oct_estimate;  // |S|/n, filled on request
};

/// Normalized average degree: the average degree itself up to 20, scaled by
/// 200/n above that (so a complete graph on 200 vertices scores 199).
double nad_from(int n, double avg_degree);
double nad(const Graph& g);

/// Top (95th percentile) over bottom (5th percentile) degree, both clamped
/// to at least 1 so degenerate inputs stay defined.
double spread_from(const DegreeStats& stats);
double spread(const Graph& g);

InstanceProfile compute_profile(const Graph& g, bool with_oct = false, std::uint64_t seed = 0);
InstanceProfile profile_from_degrees(const std::vector<int>& degrees);

struct Recommendation {
    std::string config_name;
    int hypothesis = 3;          // which of the three regions triggered
    bool add_lp = false;         // OCT share below 20%: worth adding the LP rule
    bool hardness_flag = false;  // sparse with low spread: expect a hard solve
};

/// Region rules, checked in priority order: low spread and dense picks no
/// reductions; wide spread and dense picks the dominance suite; everything
/// else the degree-1 + fold pair.
Recommendation recommend_config(const InstanceProfile& profile);

/// Greedy bipartization: seeded-order 2-coloring that banishes conflicting
/// vertices, then one re-insertion sweep. The residual is always bipartite.
std::vector<int> estimate_oct(const Graph& g, std::uint64_t seed = 0);

std::string profile_text(const InstanceProfile& profile, const Recommendation* rec = nullptr);
std::string profile_csv_header();
std::string profile_csv_row(const std::string& name, const InstanceProfile& profile);

}  // namespace vcbr
