#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vcbr/config.hpp"

namespace vcbr {

struct ReductionStats {
    std::int64_t time_us = 0;          // total time attempting the rule
    std::int64_t count = 0;            // vertices reduced
    std::int64_t effective_calls = 0;  // calls that reduced at least one vertex
    std::int64_t total_calls = 0;
};

/// Everything a solve reports. Times are integer microseconds and the
/// runtime integer milliseconds so the text format round-trips exactly.
struct StatsReport {
    std::int64_t num_vertices = 0;
    std::int64_t num_edges = 0;
    std::int64_t value = 0;
    std::int64_t runtime_ms = 0;
    std::int64_t num_branches = 0;
    // Indexed by ReductionKind; the trailing slot is the packing rule, which
    // this solver does not provide and always reports as zero.
    std::array<ReductionStats, kReductionKinds + 1> reductions{};
    std::array<std::int64_t, 4> effective_lb{};  // indexed by LowerBoundKind
    std::int64_t clique_lb_time_us = 0;
    std::int64_t cycle_lb_time_us = 0;
    std::int64_t num_leftcuts = 0;
    std::int64_t root_lb = 0;

    ReductionStats& of(ReductionKind k) { return reductions[static_cast<int>(k)]; }
    const ReductionStats& of(ReductionKind k) const { return reductions[static_cast<int>(k)]; }

    void merge(const StatsReport& other);
};

/// Renders the fixed statistics block: key column padded to 20, tab, then a
/// right-aligned 16-wide count or 10-wide millisecond value.
std::string render_stats(const StatsReport& report);

/// Inverse of render_stats; recovers every numeric field exactly.
StatsReport parse_stats(const std::string& text);

struct EffRow {
    std::string reduction;
    std::optional<double> usec_per_vertex_median;
    std::optional<double> usec_per_vertex_geomean;
    double percent_median = 0.0;
    double percent_geomean = 0.0;
};

/// Per-reduction efficiency (microseconds per vertex reduced) and
/// effectiveness (share of all reduced vertices), medians and geometric
/// means across reports, sorted by decreasing geometric-mean share.
std::vector<EffRow> efficiency_table(const std::vector<StatsReport>& reports);
std::string render_efficiency_table(const std::vector<EffRow>& rows);

struct RuntimeCell {
    double seconds = 0.0;
    bool timeout = false;  // treated as +infinity by the competitiveness rule
};

using RuntimeRow = std::map<std::string, RuntimeCell>;     // config -> runtime
using RuntimeTable = std::map<std::string, RuntimeRow>;    // instance -> row

/// Configs within a factor of two of the fastest. `min_override` supplies a
/// better minimum from trials not present in the map.
std::set<std::string> competitive_set(const RuntimeRow& runtimes,
                                      std::optional<double> min_override = std::nullopt);

/// True when every instance has at least one collection member competitive.
bool globally_competitive(const RuntimeTable& table, const std::set<std::string>& collection);

/// An instance is interesting when some config needs more than 2 seconds and
/// some config finishes under 600.
bool goldilocks(const RuntimeRow& runtimes);

}  // namespace vcbr
