#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "vcbr/graph.hpp"

namespace vcbr {

struct BlgParams {
    int n = 0;
    double avg_degree = 0.0;
    double deg_var = 1.0;  // 0 lowest-degree, 1 uniform, >1 high-degree bias
    std::optional<int> min_deg;
    std::optional<int> max_deg;
    std::uint64_t seed = 0;
};

struct GeoParams {
    int n = 0;
    std::int64_t target_edges = 0;
    bool wraparound = false;
    std::uint64_t seed = 0;
};

/// Bucket-list generator: a random spanning tree plus degree-biased random
/// edges until exactly round(n*avg/2) edges exist. Degree bounds are strict;
/// infeasible parameter sets raise.
Graph generate_blg(const BlgParams& params);

/// Uniform points in the unit square joined within the estimated radius for
/// the requested edge count, then made connected by repeatedly linking the
/// closest cross-component point pair.
Graph generate_geometric(const GeoParams& params);

std::string blg_name(const BlgParams& params);
std::string geo_name(const GeoParams& params);

}  // namespace vcbr
