#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vcbr {

enum class ReductionKind : std::uint8_t {
    Deg1,
    Dominance,
    Fold2,
    Twin,
    Lp,
    Unconfined,
    Funnel,
    Desk,
};
inline constexpr int kReductionKinds = 8;
const char* reduction_name(ReductionKind k);

enum class LowerBoundKind : std::uint8_t { Trivial, Clique, Lp, Cycle };
const char* lower_bound_name(LowerBoundKind k);

enum class BranchingRule : std::uint8_t { Random, MinDeg, MaxDeg };

/// A reduction configuration: which reductions and bounds a solve uses,
/// plus branching rule and the thresholds that shape the search.
struct ReductionConfig {
    std::array<bool, kReductionKinds> reductions{};
    bool clique_lb = false;
    bool lp_lb = false;
    bool cycle_lb = false;
    BranchingRule branching = BranchingRule::MaxDeg;
    double shrink = 0.5;
    int brute_force_threshold = 10;
    double timeout_seconds = 3600.0;
    std::uint64_t seed = 0;
    std::string name = "custom";

    bool enabled(ReductionKind k) const { return reductions[static_cast<int>(k)]; }
    void enable(ReductionKind k, bool on = true) { reductions[static_cast<int>(k)] = on; }
    bool any_reduction() const;

    /// Throws on inconsistent settings (e.g. cycle bound without LP).
    void validate() const;
};

/// Named presets. Unknown names yield nullopt. The preset that would add
/// the packing reduction degrades to its packing-free sibling and reports
/// it through `packing_dropped`.
std::optional<ReductionConfig> preset_config(std::string_view name,
                                             bool* packing_dropped = nullptr);
std::vector<std::string> preset_names();

}  // namespace vcbr
