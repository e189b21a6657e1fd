#include "vcbr/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vcbr {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::vector<int> labels, ParseWarnings* warnings) {
    if (n < 0) throw std::runtime_error("graph: negative vertex count");
    n_ = n;
    adj_.assign(n, {});
    if (labels.empty()) {
        labels_.resize(n);
        std::iota(labels_.begin(), labels_.end(), 0);
    } else {
        if (static_cast<int>(labels.size()) != n)
            throw std::runtime_error("graph: label map size mismatch");
        labels_ = std::move(labels);
    }
    ParseWarnings local;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::runtime_error("graph: vertex id out of range");
        if (u == v) {
            local.self_loops++;
            continue;
        }
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (int v = 0; v < n; v++) {
        auto& nb = adj_[v];
        std::sort(nb.begin(), nb.end());
        auto last = std::unique(nb.begin(), nb.end());
        local.duplicate_edges += nb.end() - last;
        nb.erase(last, nb.end());
        m_ += nb.size();
    }
    local.duplicate_edges /= 2;  // counted from both endpoints
    m_ /= 2;
    if (warnings) *warnings = local;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::labels_are_identity() const {
    for (int v = 0; v < n_; v++)
        if (labels_[v] != v) return false;
    return true;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && m_ == other.m_ && adj_ == other.adj_ && labels_ == other.labels_;
}

namespace {

bool significant_line(const std::string& line) {
    for (char c : line)
        if (!isspace(static_cast<unsigned char>(c))) return true;
    return false;
}

Graph parse_dimacs(const std::vector<std::string>& lines, ParseWarnings* warnings) {
    int n = -1;
    std::int64_t m_declared = -1;
    std::vector<std::pair<int, int>> edges;
    for (const auto& line : lines) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> m_declared) || n < 0 || m_declared < 0)
                throw std::runtime_error("dimacs: malformed problem line");
            edges.reserve(m_declared);
        } else if (tag == "e") {
            if (n < 0) throw std::runtime_error("dimacs: edge before problem line");
            int u, v;
            if (!(ls >> u >> v)) throw std::runtime_error("dimacs: malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw std::runtime_error("dimacs: vertex id out of range");
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw std::runtime_error("dimacs: unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) throw std::runtime_error("dimacs: missing problem line");
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);  // DIMACS numbering starts at 1
    return Graph(n, edges, std::move(labels), warnings);
}

Graph parse_edgelist(const std::vector<std::string>& lines, ParseWarnings* warnings) {
    std::vector<std::pair<long long, long long>> raw;
    for (const auto& line : lines) {
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        long long a, b;
        if (!(ls >> a)) continue;
        if (!(ls >> b)) throw std::runtime_error("edgelist: malformed line '" + line + "'");
        long long extra;
        if (ls >> extra) throw std::runtime_error("edgelist: malformed line '" + line + "'");
        raw.emplace_back(a, b);
    }
    if (raw.empty()) throw std::runtime_error("edgelist: empty input");
    // The first pair is an "n m" header when the declared edge count matches
    // and every id fits below n; otherwise all pairs are edges.
    bool header = raw[0].second == static_cast<long long>(raw.size()) - 1;
    if (header)
        for (std::size_t i = 1; i < raw.size(); i++)
            if (raw[i].first < 0 || raw[i].first >= raw[0].first || raw[i].second < 0 ||
                raw[i].second >= raw[0].first) {
                header = false;
                break;
            }
    if (header) {
        int n = static_cast<int>(raw[0].first);
        std::vector<std::pair<int, int>> edges;
        edges.reserve(raw.size() - 1);
        for (std::size_t i = 1; i < raw.size(); i++)
            edges.emplace_back(static_cast<int>(raw[i].first), static_cast<int>(raw[i].second));
        return Graph(n, edges, {}, warnings);
    }
    // Headerless: vertices are exactly the labels that appear; numbering may
    // be non-contiguous.
    std::vector<int> labels;
    labels.reserve(raw.size() * 2);
    for (auto [a, b] : raw) {
        if (a < 0 || b < 0) throw std::runtime_error("edgelist: negative vertex id");
        labels.push_back(static_cast<int>(a));
        labels.push_back(static_cast<int>(b));
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto index_of = [&labels](int x) {
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), x) - labels.begin());
    };
    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw.size());
    for (auto [a, b] : raw)
        edges.emplace_back(index_of(static_cast<int>(a)), index_of(static_cast<int>(b)));
    int n = static_cast<int>(labels.size());
    return Graph(n, edges, std::move(labels), warnings);
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format, ParseWarnings* warnings) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (significant_line(line)) lines.push_back(line);
    }
    if (lines.empty()) throw std::runtime_error("parse: empty input");
    if (format == GraphFormat::Auto) {
        char lead = 0;
        for (const auto& l : lines) {
            if (l[0] == '#') continue;
            lead = l[0];
            break;
        }
        format = (lead == 'p' || lead == 'c') ? GraphFormat::Dimacs : GraphFormat::EdgeList;
    }
    return format == GraphFormat::Dimacs ? parse_dimacs(lines, warnings)
                                         : parse_edgelist(lines, warnings);
}

Graph parse_graph_file(const std::string& path, GraphFormat format, ParseWarnings* warnings) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_graph(in, format, warnings);
}

void write_graph(const Graph& g, std::ostream& out, GraphFormat format,
                 const std::string& comment) {
    if (format == GraphFormat::Dimacs) {
        // DIMACS output requires the canonical 1..n numbering.
        for (int v = 0; v < g.num_vertices(); v++)
            if (g.label(v) != v + 1)
                throw std::runtime_error("write: dimacs output needs 1..n labels");
        if (!comment.empty()) out << "c " << comment << "\n";
        out << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
        for (int v = 0; v < g.num_vertices(); v++)
            for (int u : g.neighbors(v))
                if (v < u) out << "e " << v + 1 << " " << u + 1 << "\n";
        return;
    }
    if (!comment.empty()) out << "# " << comment << "\n";
    bool identity = g.labels_are_identity();
    if (identity) out << g.num_vertices() << " " << g.num_edges() << "\n";
    for (int v = 0; v < g.num_vertices(); v++)
        for (int u : g.neighbors(v))
            if (v < u) {
                if (identity)
                    out << v << " " << u << "\n";
                else
                    out << g.label(v) << " " << g.label(u) << "\n";
            }
}

Graph complement(const Graph& g) {
    int n = g.num_vertices();
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; v++) {
        const auto& nb = g.neighbors(v);
        std::size_t i = 0;
        for (int u = v + 1; u < n; u++) {
            while (i < nb.size() && nb[i] < u) i++;
            if (i < nb.size() && nb[i] == u) continue;
            edges.emplace_back(v, u);
        }
    }
    return Graph(n, edges, g.labels());
}

DegreeStats degree_stats_from_degrees(std::vector<int> degrees) {
    if (degrees.empty()) throw std::runtime_error("degree_stats: empty multiset");
    std::sort(degrees.begin(), degrees.end());
    std::size_t n = degrees.size();
    auto rank = [&](double q) {
        std::size_t k = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
        if (k == 0) k = 1;
        return degrees[k - 1];
    };
    DegreeStats s;
    s.min = degrees.front();
    s.max = degrees.back();
    s.p05 = rank(0.05);
    s.median = rank(0.50);
    s.p95 = rank(0.95);
    double sum = std::accumulate(degrees.begin(), degrees.end(), 0.0);
    s.mean = sum / static_cast<double>(n);
    double var = 0.0;
    for (int d : degrees) var += (d - s.mean) * (d - s.mean);
    s.stdev = std::sqrt(var / static_cast<double>(n));
    return s;
}

DegreeStats degree_stats(const Graph& g) {
    std::vector<int> degrees(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); v++) degrees[v] = g.degree(v);
    return degree_stats_from_degrees(std::move(degrees));
}

}  // namespace vcbr
