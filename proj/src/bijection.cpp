#include "kdyck/bijection.hpp"

#include "kdyck/errors.hpp"

namespace kdyck {

// -- Contour walk --

namespace {

void walk_node(const KnctNode& node, std::size_t k, std::vector<Step>& out) {
    for (std::size_t g = 0; g < k; ++g) {
        if (g) out.push_back(Step::Up); // separator
        for (const KnctNode& child : node.groups[g]) {
            out.push_back(Step::Up); // descend the edge
            walk_node(child, k, out);
        }
    }
    out.push_back(Step::Down); // return along the parent edge
}

} // namespace

KDyckPath tree_to_path(const KnctTree& tree) {
    validate_tree(tree);
    std::vector<Step> steps;
    steps.reserve((tree.k + 1) * tree.non_root_nodes());
    for (const KnctNode& child : tree.rootChildren) {
        steps.push_back(Step::Up);
        walk_node(child, tree.k, steps);
    }
    return validate(tree.k, 0, std::move(steps));
}

// -- First-return parsing --

namespace {

struct PathParser {
    const std::vector<Step>& steps;
    std::size_t k;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw MalformedPath(msg + " near step " + std::to_string(pos + 1));
    }

    // The Up at `from` either enters a child (its subtree is a net-zero
    // block: the running sum first hits 0 at the child's return) or is a
    // separator (the sum first goes <= 0 strictly negative, at the
    // enclosing node's own down-step).
    bool up_enters_child(std::size_t from) {
        long long r = 0;
        for (std::size_t q = from; q < steps.size(); ++q) {
            r += steps[q] == Step::Up ? 1 : -static_cast<long long>(k);
            if (r <= 0) return r == 0;
        }
        fail("unterminated excursion");
    }

    // pos sits just after the Up that descended into this node.
    KnctNode parse_node() {
        KnctNode node;
        node.groups.resize(k);
        std::size_t g = 0;
        for (;;) {
            if (pos >= steps.size()) fail("input ended inside a node");
            if (steps[pos] == Step::Down) {
                if (g + 1 != k)
                    fail("node closed after " + std::to_string(g + 1) + " of " +
                         std::to_string(k) + " groups");
                ++pos;
                return node;
            }
            if (up_enters_child(pos)) {
                ++pos;
                node.groups[g].push_back(parse_node());
            } else {
                if (++g >= k) fail("too many separators in one node");
                ++pos;
            }
        }
    }
};

} // namespace

KnctTree path_to_tree(const KDyckPath& path) {
    if (path.t != 0)
        throw MalformedPath("only t = 0 paths correspond to single trees");
    validate(path.k, path.t, path.steps); // reject hand-built invalid structs
    PathParser parser{path.steps, path.k};
    KnctTree tree{path.k, {}};
    while (parser.pos < path.steps.size()) {
        if (path.steps[parser.pos] != Step::Up)
            parser.fail("expected an up-step at the top level");
        ++parser.pos;
        tree.rootChildren.push_back(parser.parse_node());
    }
    return tree;
}

std::pair<EdgeClassHist, ResidueStats> statistic_transport(const KnctTree& tree) {
    return {edge_class_histogram(tree, 0), residue_histogram(tree_to_path(tree))};
}

// -- Bounded decomposition --

BoundedDecomposition decompose_bounded(const KDyckPath& path) {
    try {
        validate(path.k, path.t, path.steps);
    } catch (const Error& e) {
        throw MalformedPath(e.what());
    }
    BoundedDecomposition d{path.k, path.t, {}};
    std::vector<Step> cur = path.steps;
    for (std::size_t stage = 0; stage < path.t; ++stage) {
        // last up-step leaving level -1 in cur's own frame
        long long level = 0;
        std::size_t mark = cur.size();
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] == Step::Up && level == -1) mark = i;
            level += cur[i] == Step::Up ? 1 : -static_cast<long long>(path.k);
        }
        if (mark == cur.size()) {
            // never dips: this stage's frame already holds a t=0 path
            d.components.push_back(validate(path.k, 0, std::move(cur)));
            cur = {};
        } else {
            std::vector<Step> suffix(cur.begin() + static_cast<std::ptrdiff_t>(mark) + 1,
                                     cur.end());
            d.components.push_back(validate(path.k, 0, std::move(suffix)));
            // relocate the marked up-step to the front; the remainder is a
            // path one level deeper
            std::vector<Step> next;
            next.reserve(mark + 1);
            next.push_back(Step::Up);
            next.insert(next.end(), cur.begin(),
                        cur.begin() + static_cast<std::ptrdiff_t>(mark));
            cur = std::move(next);
        }
    }
    d.components.push_back(validate(path.k, 0, std::move(cur)));
    return d;
}

KDyckPath recombine(const BoundedDecomposition& d) {
    if (d.components.size() != d.t + 1)
        throw MalformedDecomposition("expected " + std::to_string(d.t + 1) +
                                     " components, got " +
                                     std::to_string(d.components.size()));
    try {
        for (const KDyckPath& c : d.components) validate(d.k, 0, c.steps);

        std::vector<Step> acc = d.components[d.t].steps;
        for (std::size_t s = d.t; s-- > 0;) {
            const auto& comp = d.components[s].steps;
            if (acc.empty()) {
                acc = comp;
                continue;
            }
            if (acc.front() != Step::Up)
                throw MalformedDecomposition(
                    "component " + std::to_string(s + 1) +
                    " onward does not start with an up-step");
            std::vector<Step> next(acc.begin() + 1, acc.end());
            next.push_back(Step::Up);
            next.insert(next.end(), comp.begin(), comp.end());
            acc = std::move(next);
        }
        return validate(d.k, d.t, std::move(acc));
    } catch (const MalformedDecomposition&) {
        throw;
    } catch (const Error& e) {
        throw MalformedDecomposition(e.what());
    }
}

} // namespace kdyck
