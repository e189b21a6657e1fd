#include "vcbr/unfold.hpp"

#include <algorithm>
#include <stdexcept>

namespace vcbr {

namespace {

struct Expander {
    std::vector<char>& in;

    bool get(int v) const {
        if (v < 0 || v >= static_cast<int>(in.size()))
            throw std::runtime_error("unfold: record references unknown vertex");
        return in[v];
    }
    void add(int v) { in[v] = 1; }
    void remove(int v) { in[v] = 0; }
    bool all(const std::vector<int>& vs) const {
        for (int v : vs)
            if (!get(v)) return false;
        return true;
    }

    void operator()(const Fold2Record& r) {
        if (get(r.z)) {
            remove(r.z);
            add(r.u);
            add(r.w);
        } else {
            add(r.v);
        }
    }
    void operator()(const TwinRecord& r) {
        if (get(r.z)) {
            remove(r.z);
            for (int x : r.neighbors) add(x);
        } else {
            add(r.v);
            add(r.w);
        }
    }
    void operator()(const FunnelRecord& r) {
        // The common neighbors were decided into the cover when the funnel
        // fired; only the v-or-w choice is left.
        if (all(r.nv_minus))
            add(r.w);
        else
            add(r.v);
    }
    void operator()(const DeskRecord& r) {
        if (all(r.n13)) {
            add(r.cycle[1]);
            add(r.cycle[3]);
        } else {
            add(r.cycle[0]);
            add(r.cycle[2]);
        }
    }
};

}  // namespace

std::vector<int> unfold_solution(const std::vector<UnfoldRecord>& ledger,
                                 const std::vector<int>& cover, int universe,
                                 int base_vertices) {
    std::vector<char> in(universe, 0);
    for (int v : cover) {
        if (v < 0 || v >= universe)
            throw std::runtime_error("unfold: cover vertex outside universe");
        in[v] = 1;
    }
    Expander expander{in};
    for (auto it = ledger.rbegin(); it != ledger.rend(); ++it) std::visit(expander, *it);
    std::vector<int> result;
    for (int v = 0; v < universe; v++)
        if (in[v]) {
            if (v >= base_vertices)
                throw std::runtime_error("unfold: overlay vertex survived unfolding");
            result.push_back(v);
        }
    return result;
}

}  // namespace vcbr
