#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kdyck/histogram.hpp"
#include "kdyck/paths.hpp"
#include "kdyck/trees.hpp"

namespace kdyck {

// A path bounded below by -t, cut into t+1 closed excursions: component s
// (0-indexed) is a valid t=0 path understood at vertical offset -s, and its
// root carries mark r_{k-s}.
struct BoundedDecomposition {
    std::size_t k = 2;
    std::size_t t = 0;
    std::vector<KDyckPath> components; // size t+1, each valid at t=0

    friend bool operator==(const BoundedDecomposition&, const BoundedDecomposition&) = default;
};

// Contour walk over the tree: descending an edge emits an Up; at every
// non-root node the k groups are visited in order with a separator Up
// between consecutive groups, and the return along the parent edge emits
// the Down.  The root's single group is visited with no separators.
// Output: m Downs, k*m Ups, valid at t = 0.
KDyckPath tree_to_path(const KnctTree& tree);

// Inverse of tree_to_path via recursive first-return parsing; throws
// MalformedPath if t != 0 (the walk only produces nonnegative paths).
KnctTree path_to_tree(const KDyckPath& path);

// (edge_class_histogram(tree, 0), residue_histogram(tree_to_path(tree))).
// The central consistency check: the two must be equal.
std::pair<EdgeClassHist, ResidueStats> statistic_transport(const KnctTree& tree);

// Cuts a bounded path into t+1 t=0 components; the cut for stage s is
// placed before the last up-step leaving level -s.  recombine inverts it.
BoundedDecomposition decompose_bounded(const KDyckPath& path);

// Reassembles the original bounded path; throws MalformedDecomposition.
KDyckPath recombine(const BoundedDecomposition& d);

} // namespace kdyck
