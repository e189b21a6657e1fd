#pragma once

#include <string>
#include <string_view>

#include "vcbr/graph.hpp"

namespace vcbr {

struct VerifyResult {
    bool valid = false;  // every edge has an endpoint marked '1'
    int size = 0;        // number of '1' characters
};

/// Checks a solution bit string against a graph. Positions index external
/// labels; '_' is only allowed at labels absent from the graph. Malformed
/// strings (wrong length, '_' at a present vertex, '1' at an absent one)
/// raise; an honest non-cover just comes back with valid == false.
VerifyResult verify_solution(const Graph& g, std::string_view bits);

/// Entry point behind the vc_reduce binary. Exit codes: 0 success, 2 bad
/// usage, 3 unreadable/malformed input, 4 infeasible generator parameters,
/// 5 finished without an optimality proof (timeout).
int run_cli(int argc, const char* const* argv);

}  // namespace vcbr
