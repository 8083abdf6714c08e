#include "kdyck/trees.hpp"

#include "kdyck/errors.hpp"

namespace kdyck {

namespace {

std::size_t count_nodes(const std::vector<KnctNode>& group) {
    std::size_t n = 0;
    for (const KnctNode& child : group) {
        n += 1;
        for (const auto& g : child.groups) n += count_nodes(g);
    }
    return n;
}

void encode_group(const std::vector<KnctNode>& group, std::string& out) {
    for (const KnctNode& child : group) {
        out += '(';
        for (std::size_t g = 0; g < child.groups.size(); ++g) {
            if (g) out += '|';
            encode_group(child.groups[g], out);
        }
        out += ')';
    }
}

void validate_node(const KnctNode& node, std::size_t k) {
    if (node.groups.size() != k)
        throw MalformedTree("node has " + std::to_string(node.groups.size()) +
                            " groups, expected " + std::to_string(k));
    for (const auto& g : node.groups)
        for (const KnctNode& child : g) validate_node(child, k);
}

} // namespace

std::size_t KnctTree::non_root_nodes() const {
    return count_nodes(rootChildren);
}

std::string KnctTree::encode() const {
    std::string out;
    encode_group(rootChildren, out);
    return out;
}

void validate_tree(const KnctTree& tree) {
    if (tree.k < 2)
        throw MalformedTree("k must be at least 2, got " + std::to_string(tree.k));
    for (const KnctNode& child : tree.rootChildren) validate_node(child, tree.k);
}

// -- Parsing --

namespace {

struct TreeParser {
    const std::string& text;
    std::size_t k;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                text[pos] == '\r'))
            ++pos;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw MalformedTree(msg + " at position " + std::to_string(pos + 1));
    }

    // group := node*   node := '(' group ('|' group){k-1} ')'
    std::vector<KnctNode> parse_group() {
        std::vector<KnctNode> group;
        while (peek_is('(')) group.push_back(parse_node());
        return group;
    }

    KnctNode parse_node() {
        ++pos; // consume '('
        KnctNode node;
        node.groups.push_back(parse_group());
        while (peek_is('|')) {
            ++pos;
            node.groups.push_back(parse_group());
        }
        skip_ws();
        if (pos >= text.size() || text[pos] != ')') fail("expected ')' or '|'");
        ++pos;
        if (node.groups.size() != k)
            fail("node has " + std::to_string(node.groups.size()) +
                 " groups, expected " + std::to_string(k));
        return node;
    }
};

} // namespace

KnctTree parse_tree(std::size_t k, const std::string& text) {
    if (k < 2)
        throw MalformedTree("k must be at least 2, got " + std::to_string(k));
    TreeParser parser{text, k};
    KnctTree tree{k, parser.parse_group()};
    parser.skip_ws();
    if (parser.pos != text.size())
        parser.fail("trailing input after tree");
    return tree;
}

// -- Enumeration --

namespace {

// forests[s] = every ordered forest of butterflies with s nodes total,
// built bottom-up so all cross-references hit finished levels.
struct TreeTable {
    std::size_t k;
    std::vector<std::vector<std::vector<KnctNode>>> forests;

    explicit TreeTable(std::size_t k, std::size_t m) : k(k) {
        forests.resize(m + 1);
        forests[0] = {{}};
        for (std::size_t total = 1; total <= m; ++total) {
            for (std::size_t first = 1; first <= total; ++first)
                for (const KnctNode& head : butterflies(first))
                    for (const auto& rest : forests[total - first]) {
                        std::vector<KnctNode> f;
                        f.reserve(rest.size() + 1);
                        f.push_back(head);
                        f.insert(f.end(), rest.begin(), rest.end());
                        forests[total].push_back(std::move(f));
                    }
        }
    }

    // Every butterfly with `size` nodes: one atom plus k ordered groups
    // splitting the remaining size-1 nodes, compositions in lex order.
    std::vector<KnctNode> butterflies(std::size_t size) {
        std::vector<KnctNode> out;
        KnctNode node;
        node.groups.resize(k);
        fill_groups(node, 0, size - 1, out);
        return out;
    }

    void fill_groups(KnctNode& node, std::size_t g, std::size_t left,
                     std::vector<KnctNode>& out) {
        if (g + 1 == k) {
            for (const auto& f : forests[left]) {
                node.groups[g] = f;
                out.push_back(node);
            }
            node.groups[g].clear();
            return;
        }
        for (std::size_t take = 0; take <= left; ++take)
            for (const auto& f : forests[take]) {
                node.groups[g] = f;
                fill_groups(node, g + 1, left - take, out);
            }
        node.groups[g].clear();
    }
};

} // namespace

void enumerate_trees(std::size_t k, std::size_t m,
                     const std::function<void(const KnctTree&)>& yield) {
    if (k < 2) throw BadParameters("k must be at least 2, got " + std::to_string(k));
    TreeTable table(k, m);
    for (const auto& forest : table.forests[m]) yield(KnctTree{k, forest});
}

std::vector<KnctTree> collect_trees(std::size_t k, std::size_t m) {
    std::vector<KnctTree> out;
    enumerate_trees(k, m, [&](const KnctTree& t) { out.push_back(t); });
    return out;
}

// -- Statistics --

namespace {

// class of a child edge in 1-indexed group g under parent-edge class c:
// the value in 1..k congruent to c+g mod k.
std::size_t child_class(std::size_t c, std::size_t g, std::size_t k) {
    return (c + g - 1) % k + 1;
}

void tally_classes(const KnctNode& node, std::size_t cls, std::size_t k,
                   EdgeClassHist& h) {
    ++h.at_class(cls);
    for (std::size_t g = 1; g <= k; ++g)
        for (const KnctNode& child : node.groups[g - 1])
            tally_classes(child, child_class(cls, g, k), k, h);
}

void tally_positions(const KnctNode& node, std::size_t cls, std::size_t k,
                     EdgeClassHist& h) {
    ++h.at_class(cls);
    for (std::size_t g = 1; g <= k; ++g)
        for (const KnctNode& child : node.groups[g - 1])
            tally_positions(child, g, k, h);
}

KnctNode rotate_node(const KnctNode& node, std::size_t cls, std::size_t k) {
    KnctNode out;
    out.groups.resize(k);
    for (std::size_t g = 1; g <= k; ++g) {
        std::size_t target = child_class(cls, g, k);
        auto& dest = out.groups[target - 1];
        for (const KnctNode& child : node.groups[g - 1])
            dest.push_back(rotate_node(child, target, k));
    }
    return out;
}

} // namespace

EdgeClassHist edge_class_histogram(const KnctTree& tree, std::size_t rootOffset) {
    validate_tree(tree);
    EdgeClassHist h(tree.k);
    std::size_t root_class = (tree.k - rootOffset % tree.k - 1) % tree.k + 1;
    for (const KnctNode& child : tree.rootChildren)
        tally_classes(child, root_class, tree.k, h);
    return h;
}

EdgeClassHist positional_histogram(const KnctTree& tree) {
    validate_tree(tree);
    EdgeClassHist h(tree.k);
    for (const KnctNode& child : tree.rootChildren)
        tally_positions(child, tree.k, tree.k, h);
    return h;
}

KnctTree rotate_subtrees(const KnctTree& tree) {
    validate_tree(tree);
    KnctTree out{tree.k, {}};
    out.rootChildren.reserve(tree.rootChildren.size());
    for (const KnctNode& child : tree.rootChildren)
        out.rootChildren.push_back(rotate_node(child, tree.k, tree.k));
    return out;
}

} // namespace kdyck
