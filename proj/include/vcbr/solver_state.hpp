#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "vcbr/graph.hpp"
#include "vcbr/unfold.hpp"

namespace vcbr {

enum class VertexStatus : std::uint8_t { Undecided, InCover, OutOfCover };

enum class DecisionSource : std::uint8_t { Branching, Reduction, BruteForce, Decompose };

struct FrameToken {
    std::size_t mark = 0;
    std::uint64_t serial = 0;
};

/// The single mutable solve context. The base graph is never touched;
/// contractions place new vertices and edges in an overlay, and every
/// mutation lands on a change stack so frames restore bit-exactly.
class SolverState {
public:
    explicit SolverState(const Graph& g);
    explicit SolverState(Graph&&) = delete;  // the graph must outlive the state

    const Graph& graph() const { return *graph_; }
    int base_vertices() const { return n_; }
    int total_vertices() const { return static_cast<int>(status_.size()); }

    VertexStatus status(int v) const { return status_[v]; }
    bool undecided_vertex(int v) const { return status_[v] == VertexStatus::Undecided; }
    int degree(int v) const { return degree_[v]; }  // undecided neighbors only
    int undecided() const { return undecided_; }
    int cover_count() const { return cover_count_; }
    std::uint64_t version() const { return version_; }

    void set_status(int v, VertexStatus s, DecisionSource src);
    /// New overlay vertex adjacent to `neighbors` (all undecided). Ids grow
    /// from n upward in creation order.
    int add_overlay_vertex(std::vector<int> neighbors);
    /// Adds an overlay edge unless the endpoints are already adjacent.
    bool add_overlay_edge(int u, int v);
    void add_cover_offset(int delta);
    void push_unfold(UnfoldRecord rec);

    bool adjacent(int u, int v) const;

    template <class F>
    void for_neighbors(int v, F&& f) const {
        if (v < n_)
            for (int u : graph_->neighbors(v)) f(u);
        for (int u : extra_[v]) f(u);
    }
    std::vector<int> undecided_neighbors(int v) const;
    /// Sorted N[v] restricted to undecided vertices (v included).
    std::vector<int> closed_undecided_neighborhood(int v) const;

    FrameToken save();
    void restore(const FrameToken& token);

    const std::vector<UnfoldRecord>& ledger() const { return ledger_; }
    std::vector<int> cover_vertices() const;
    std::vector<int> undecided_vertices() const;

    /// Optional per-source decision counters, shared with the stats sink.
    void attach_decision_counters(std::array<std::int64_t, 4>* sink) { decisions_ = sink; }

    bool operator==(const SolverState& other) const;

private:
    struct Change {
        enum Kind : std::uint8_t { Status, OverlayVertex, OverlayEdge, Offset, Ledger } kind;
        int a = 0, b = 0;
    };
    void undo(const Change& c);

    const Graph* graph_ = nullptr;
    int n_ = 0;
    std::vector<VertexStatus> status_;
    std::vector<int> degree_;
    std::vector<std::vector<int>> extra_;  // overlay adjacency
    int undecided_ = 0;
    int cover_count_ = 0;
    std::vector<Change> changes_;
    std::vector<FrameToken> frames_;
    std::uint64_t next_serial_ = 1;
    std::uint64_t version_ = 0;
    std::vector<UnfoldRecord> ledger_;
    std::array<std::int64_t, 4>* decisions_ = nullptr;
};

/// Maximal connected classes of undecided vertices under the current
/// adjacency, ordered by smallest member id.
std::vector<std::vector<int>> connected_components(const SolverState& state);

/// Degree statistics over undecided base vertices (overlay excluded).
DegreeStats degree_stats(const SolverState& state);

}  // namespace vcbr
