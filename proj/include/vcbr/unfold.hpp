#pragma once

#include <array>
#include <variant>
#include <vector>

namespace vcbr {

// Contraction records. Each one remembers enough of the rewritten
// neighborhood to translate a cover of the reduced instance back to the
// original graph; they are replayed newest-first.

struct Fold2Record {
    int v, u, w;  // degree-2 vertex and its two non-adjacent neighbors
    int z;        // overlay vertex replacing the three
};

struct TwinRecord {
    int v, w;                      // the twins
    std::array<int, 3> neighbors;  // their shared neighborhood
    int z;
};

struct FunnelRecord {
    int v, w;
    std::vector<int> common;    // N(v) ∩ N(w), already decided into the cover
    std::vector<int> nv_minus;  // N(v) \ N[w]
    std::vector<int> nw_minus;  // N(w) \ N[v]
};

struct DeskRecord {
    std::array<int, 4> cycle;  // v1 v2 v3 v4 of the chordless four-cycle
    std::vector<int> n13;      // external neighbors of v1, v3
    std::vector<int> n24;      // external neighbors of v2, v4
};

using UnfoldRecord = std::variant<Fold2Record, TwinRecord, FunnelRecord, DeskRecord>;

/// Expands `cover` (a cover of the fully reduced instance, overlay vertices
/// included) into a cover of the original graph by replaying the ledger
/// newest-first. `universe` is the highest vertex id + 1 at ledger end.
std::vector<int> unfold_solution(const std::vector<UnfoldRecord>& ledger,
                                 const std::vector<int>& cover, int universe,
                                 int base_vertices);

}  // namespace vcbr
