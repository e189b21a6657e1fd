#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace vcbr {

enum class GraphFormat { Auto, Dimacs, EdgeList };

struct ParseWarnings {
    std::int64_t duplicate_edges = 0;
    std::int64_t self_loops = 0;
};

/// Immutable simple undirected graph. Internal ids are contiguous 0..n-1;
/// the label map keeps the input's external numbering (1-indexed DIMACS,
/// possibly non-contiguous edge lists) for solution output.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list over internal ids. Self-loops are
    /// dropped and parallel edges collapsed; counts go to `warnings` if given.
    Graph(int n, const std::vector<std::pair<int, int>>& edges,
          std::vector<int> labels = {}, ParseWarnings* warnings = nullptr);

    int num_vertices() const { return n_; }
    std::int64_t num_edges() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    int label(int v) const { return labels_[v]; }
    const std::vector<int>& labels() const { return labels_; }
    bool labels_are_identity() const;

    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::vector<int>> adj_;  // sorted ascending
    std::vector<int> labels_;
};

/// Reads DIMACS ("p edge n m" + "e u v", 1-indexed) or plain edge list
/// (optional "n m" header, 0-indexed pairs). Auto mode sniffs the first
/// significant line: 'p'/'c' means DIMACS, anything else edge list.
Graph parse_graph(std::istream& in, GraphFormat format = GraphFormat::Auto,
                  ParseWarnings* warnings = nullptr);
Graph parse_graph_file(const std::string& path, GraphFormat format = GraphFormat::Auto,
                       ParseWarnings* warnings = nullptr);

/// Writers are label-preserving so parse(write(g)) == g.
void write_graph(const Graph& g, std::ostream& out, GraphFormat format = GraphFormat::EdgeList,
                 const std::string& comment = {});

Graph complement(const Graph& g);

struct DegreeStats {
    int min = 0;
    int p05 = 0;     // "bottom" degree b
    int median = 0;
    int p95 = 0;     // "top" degree t
    int max = 0;
    double mean = 0.0;
    double stdev = 0.0;  // population
};

/// Nearest-rank percentiles (ceil(q*n)-th smallest) over a degree multiset.
DegreeStats degree_stats_from_degrees(std::vector<int> degrees);
DegreeStats degree_stats(const Graph& g);

}  // namespace vcbr
