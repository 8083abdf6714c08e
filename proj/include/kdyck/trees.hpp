#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "kdyck/histogram.hpp"

namespace kdyck {

// Non-root node of a butterfly tree: exactly k ordered child groups (the
// k-1 separators between consecutive groups are implicit).
struct KnctNode {
    std::vector<std::vector<KnctNode>> groups;

    friend bool operator==(const KnctNode&, const KnctNode&) = default;
};

// k-non-crossing tree in butterfly form.  The root carries a single child
// group; every non-root node carries exactly k groups.  m = number of
// non-root nodes; total nodes = m + 1.
struct KnctTree {
    std::size_t k = 2;
    std::vector<KnctNode> rootChildren;

    std::size_t non_root_nodes() const;

    // Canonical nested-parenthesization with "|" between groups, e.g. a
    // single k=2 leaf child is "(|)"; the bare root is the empty string.
    std::string encode() const;

    friend bool operator==(const KnctTree&, const KnctTree&) = default;
};

// Structural check: every non-root node has exactly k groups.  Throws
// MalformedTree.
void validate_tree(const KnctTree& tree);

// Parses the canonical encoding (whitespace ignored); throws MalformedTree.
KnctTree parse_tree(std::size_t k, const std::string& text);

// Streams every butterfly tree with m non-root nodes exactly once, in a
// deterministic order.  Throws BadParameters.
void enumerate_trees(std::size_t k, std::size_t m,
                     const std::function<void(const KnctTree&)>& yield);

std::vector<KnctTree> collect_trees(std::size_t k, std::size_t m);

// Top-down class assignment: root edges get class k - rootOffset; an edge
// in group g of a node whose own parent edge has class c gets class
// (c + g) mod k, residue 0 stored at index k.  Tallies per class.
EdgeClassHist edge_class_histogram(const KnctTree& tree, std::size_t rootOffset = 0);

// Tally with the identity labeling instead: class = group index of the
// edge (root edges count as class k).
EdgeClassHist positional_histogram(const KnctTree& tree);

// Cyclic top-down shift of every node's groups so that afterwards every
// edge sits in the group matching its class:
// positional_histogram(rotate_subtrees(x)) = edge_class_histogram(x, 0).
KnctTree rotate_subtrees(const KnctTree& tree);

} // namespace kdyck
