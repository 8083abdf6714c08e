#include "kdyck/geometric.hpp"

#include <algorithm>

#include "kdyck/errors.hpp"

namespace kdyck {

bool chords_cross(std::pair<int, int> e, std::pair<int, int> f) {
    int a = e.first, b = e.second, c = f.first, d = f.second;
    if (a == c || a == d || b == c || b == d) return false;
    bool c_inside = a < c && c < b;
    bool d_inside = a < d && d < b;
    return c_inside != d_inside;
}

namespace {

// Decodes one Pruefer sequence over {1..n} into the edge list of the
// labelled tree it encodes (n >= 2; empty sequence for n = 2).
std::vector<std::pair<int, int>> pruefer_decode(const std::vector<int>& seq,
                                                std::size_t n) {
    std::vector<int> degree(n + 1, 1);
    for (int s : seq) ++degree[s];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int s : seq) {
        for (int v = 1; v <= static_cast<int>(n); ++v) {
            if (degree[v] == 1) {
                edges.emplace_back(std::min(v, s), std::max(v, s));
                --degree[v];
                --degree[s];
                break;
            }
        }
    }
    int u = 0;
    for (int v = 1; v <= static_cast<int>(n); ++v)
        if (degree[v] == 1) {
            if (u == 0)
                u = v;
            else
                edges.emplace_back(u, v);
        }
    return edges;
}

bool non_crossing(const std::vector<std::pair<int, int>>& edges) {
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (chords_cross(edges[i], edges[j])) return false;
    return true;
}

} // namespace

void enumerate_geometric_ncts(std::size_t n,
                              const std::function<void(const GeometricNct&)>& yield) {
    if (n < 1 || n > 9)
        throw BadParameters("geometric enumeration supports 1 <= n <= 9, got " +
                            std::to_string(n));
    if (n == 1) {
        yield(GeometricNct{1, {}});
        return;
    }
    // odometer over all n^(n-2) Pruefer sequences; keep the non-crossing ones
    std::vector<int> seq(n - 2, 1);
    for (;;) {
        auto edges = pruefer_decode(seq, n);
        std::sort(edges.begin(), edges.end());
        if (non_crossing(edges)) yield(GeometricNct{n, edges});
        std::size_t i = 0;
        while (i < seq.size() && seq[i] == static_cast<int>(n)) {
            seq[i] = 1;
            ++i;
        }
        if (i == seq.size()) break;
        ++seq[i];
    }
}

std::vector<GeometricNct> collect_geometric_ncts(std::size_t n) {
    std::vector<GeometricNct> out;
    enumerate_geometric_ncts(n, [&](const GeometricNct& t) { out.push_back(t); });
    return out;
}

EdgeClassHist classify_left_right(const GeometricNct& tree) {
    EdgeClassHist h(2);
    if (tree.n == 1) return h;
    std::vector<std::vector<int>> adj(tree.n + 1);
    for (auto [a, b] : tree.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> parent(tree.n + 1, 0);
    std::vector<int> stack{1};
    parent[1] = 1;
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (int c : adj[p])
            if (parent[c] == 0) {
                parent[c] = p;
                ++h.at_class(c < p ? 1 : 2);
                stack.push_back(c);
            }
    }
    return h;
}

} // namespace kdyck
