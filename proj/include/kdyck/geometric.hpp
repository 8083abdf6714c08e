#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "kdyck/histogram.hpp"

namespace kdyck {

// Spanning tree of the points 1..n in convex position, drawn with chords,
// no two of which cross.  The k = 2 oracle object.
struct GeometricNct {
    std::size_t n = 1;
    std::vector<std::pair<int, int>> edges; // each pair (a, b) with a < b, sorted

    friend bool operator==(const GeometricNct&, const GeometricNct&) = default;
};

// Chords {a,b} and {c,d} on the circle cross iff they share no endpoint and
// exactly one of c, d lies strictly between a and b.
bool chords_cross(std::pair<int, int> e, std::pair<int, int> f);

// Streams all non-crossing spanning trees on n circle points, rooted at
// node 1, each exactly once.  Requires 1 <= n <= 9 (the search walks all
// n^(n-2) labelled trees); throws BadParameters outside that range.
void enumerate_geometric_ncts(std::size_t n,
                              const std::function<void(const GeometricNct&)>& yield);

std::vector<GeometricNct> collect_geometric_ncts(std::size_t n);

// Orients edges away from root 1; an edge parent -> child is left (class 1)
// iff child < parent, right (class 2) otherwise.
EdgeClassHist classify_left_right(const GeometricNct& tree);

} // namespace kdyck
