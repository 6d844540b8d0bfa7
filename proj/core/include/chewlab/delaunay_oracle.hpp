#pragma once

#include <array>
#include <vector>

#include "chewlab/pointset.hpp"

namespace chewlab {

// Exhaustive empty-circle edge oracle, intended for cross-checking the
// incremental construction at small sizes (O(n^4), fine for n <= ~16).
//
// An edge is reported when some witness circle through both endpoints
// (a diametral circle or a circle through one more point) is empty.
// Edges whose only witnesses carry cocircular ties are reported in
// `ambiguous` instead of `firm`.
struct BruteForceEdges {
    std::vector<std::array<int, 2>> firm;       // u < v, sorted
    std::vector<std::array<int, 2>> ambiguous;  // u < v, sorted
};

BruteForceEdges brute_force_delaunay_edges(const PointSet& ps);

}  // namespace chewlab
