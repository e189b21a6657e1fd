#include "vcbr/solver_state.hpp"

#include <algorithm>
#include <stdexcept>

namespace vcbr {

SolverState::SolverState(const Graph& g) : graph_(&g), n_(g.num_vertices()) {
    status_.assign(n_, VertexStatus::Undecided);
    degree_.resize(n_);
    for (int v = 0; v < n_; v++) degree_[v] = g.degree(v);
    extra_.assign(n_, {});
    undecided_ = n_;
}

void SolverState::set_status(int v, VertexStatus s, DecisionSource src) {
    if (s == VertexStatus::Undecided)
        throw std::logic_error("set_status: cannot undecide outside restore");
    if (status_[v] != VertexStatus::Undecided)
        throw std::logic_error("set_status: vertex already decided");
    changes_.push_back({Change::Status, v, 0});
    status_[v] = s;
    undecided_--;
    if (s == VertexStatus::InCover) cover_count_++;
    for_neighbors(v, [&](int u) {
        if (status_[u] == VertexStatus::Undecided) degree_[u]--;
    });
    version_++;
    if (decisions_) (*decisions_)[static_cast<int>(src)]++;
}

int SolverState::add_overlay_vertex(std::vector<int> neighbors) {
    std::sort(neighbors.begin(), neighbors.end());
    int z = total_vertices();
    for (int u : neighbors) {
        if (status_[u] != VertexStatus::Undecided)
            throw std::logic_error("overlay vertex attached to decided neighbor");
        extra_[u].push_back(z);
        degree_[u]++;
    }
    status_.push_back(VertexStatus::Undecided);
    degree_.push_back(static_cast<int>(neighbors.size()));
    extra_.push_back(std::move(neighbors));
    undecided_++;
    changes_.push_back({Change::OverlayVertex, z, 0});
    version_++;
    return z;
}

bool SolverState::add_overlay_edge(int u, int v) {
    if (u == v || adjacent(u, v)) return false;
    extra_[u].push_back(v);
    extra_[v].push_back(u);
    if (status_[u] == VertexStatus::Undecided) degree_[v]++;
    if (status_[v] == VertexStatus::Undecided) degree_[u]++;
    changes_.push_back({Change::OverlayEdge, u, v});
    version_++;
    return true;
}

void SolverState::add_cover_offset(int delta) {
    cover_count_ += delta;
    changes_.push_back({Change::Offset, delta, 0});
    version_++;
}

void SolverState::push_unfold(UnfoldRecord rec) {
    ledger_.push_back(std::move(rec));
    changes_.push_back({Change::Ledger, 0, 0});
    version_++;
}

bool SolverState::adjacent(int u, int v) const {
    if (u < n_ && v < n_ && graph_->adjacent(u, v)) return true;
    const auto& a = extra_[u].size() <= extra_[v].size() ? extra_[u] : extra_[v];
    int target = extra_[u].size() <= extra_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), target) != a.end();
}

std::vector<int> SolverState::undecided_neighbors(int v) const {
    std::vector<int> out;
    for_neighbors(v, [&](int u) {
        if (status_[u] == VertexStatus::Undecided) out.push_back(u);
    });
    return out;
}

std::vector<int> SolverState::closed_undecided_neighborhood(int v) const {
    std::vector<int> out = undecided_neighbors(v);
    out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

FrameToken SolverState::save() {
    FrameToken token{changes_.size(), next_serial_++};
    frames_.push_back(token);
    return token;
}

void SolverState::undo(const Change& c) {
    switch (c.kind) {
        case Change::Status: {
            int v = c.a;
            VertexStatus old = status_[v];
            status_[v] = VertexStatus::Undecided;
            undecided_++;
            if (old == VertexStatus::InCover) cover_count_--;
            int d = 0;
            for_neighbors(v, [&](int u) {
                if (status_[u] == VertexStatus::Undecided) {
                    degree_[u]++;
                    d++;
                }
            });
            degree_[v] = d;
            break;
        }
        case Change::OverlayVertex: {
            int z = c.a;
            if (z != total_vertices() - 1)
                throw std::logic_error("overlay undo out of order");
            for (int u : extra_[z]) {
                if (extra_[u].back() != z) throw std::logic_error("overlay undo mismatch");
                extra_[u].pop_back();
                if (status_[u] == VertexStatus::Undecided) degree_[u]--;
            }
            status_.pop_back();
            degree_.pop_back();
            extra_.pop_back();
            undecided_--;
            break;
        }
        case Change::OverlayEdge: {
            int u = c.a, v = c.b;
            if (extra_[u].back() != v || extra_[v].back() != u)
                throw std::logic_error("overlay edge undo mismatch");
            extra_[u].pop_back();
            extra_[v].pop_back();
            if (status_[u] == VertexStatus::Undecided) degree_[v]--;
            if (status_[v] == VertexStatus::Undecided) degree_[u]--;
            break;
        }
        case Change::Offset:
            cover_count_ -= c.a;
            break;
        case Change::Ledger:
            ledger_.pop_back();
            break;
    }
}

void SolverState::restore(const FrameToken& token) {
    if (frames_.empty() || frames_.back().serial != token.serial ||
        frames_.back().mark != token.mark)
        throw std::logic_error("restore: non-LIFO frame token");
    frames_.pop_back();
    while (changes_.size() > token.mark) {
        undo(changes_.back());
        changes_.pop_back();
    }
    version_++;
}

std::vector<int> SolverState::cover_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < total_vertices(); v++)
        if (status_[v] == VertexStatus::InCover) out.push_back(v);
    return out;
}

std::vector<int> SolverState::undecided_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < total_vertices(); v++)
        if (status_[v] == VertexStatus::Undecided) out.push_back(v);
    return out;
}

bool SolverState::operator==(const SolverState& other) const {
    return status_ == other.status_ && undecided_ == other.undecided_ &&
           cover_count_ == other.cover_count_ && extra_ == other.extra_ &&
           ledger_.size() == other.ledger_.size() && degree_ == other.degree_;
}

std::vector<std::vector<int>> connected_components(const SolverState& state) {
    int total = state.total_vertices();
    std::vector<char> seen(total, 0);
    std::vector<std::vector<int>> classes;
    std::vector<int> queue;
    for (int s = 0; s < total; s++) {
        if (seen[s] || !state.undecided_vertex(s)) continue;
        queue.assign(1, s);
        seen[s] = 1;
        std::vector<int> cls;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            cls.push_back(v);
            state.for_neighbors(v, [&](int u) {
                if (!seen[u] && state.undecided_vertex(u)) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
            });
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

DegreeStats degree_stats(const SolverState& state) {
    std::vector<int> degrees;
    degrees.reserve(state.undecided());
    for (int v = 0; v < state.base_vertices(); v++)
        if (state.undecided_vertex(v)) degrees.push_back(state.degree(v));
    return degree_stats_from_degrees(std::move(degrees));
}

}  // namespace vcbr
