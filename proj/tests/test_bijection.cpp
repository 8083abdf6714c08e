#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "kdyck/bijection.hpp"
#include "kdyck/paths.hpp"
#include "kdyck/trees.hpp"

using namespace kdyck;

TEST_CASE("contour walk on small trees") {
    CHECK(tree_to_path(KnctTree{2, {}}).encode() == "");
    CHECK(tree_to_path(parse_tree(2, "(|)")).encode() == "UUD");
    CHECK(tree_to_path(parse_tree(3, "(||)")).encode() == "UUUD");
    // child in group 1 is visited before the separator, group 2 after
    CHECK(tree_to_path(parse_tree(2, "((|)|)")).encode() == "UUUDUD");
    CHECK(tree_to_path(parse_tree(2, "(|(|))")).encode() == "UUUUDD");
    CHECK(tree_to_path(parse_tree(2, "(|)(|)")).encode() == "UUDUUD");
}

TEST_CASE("the worked ten-node example maps to the worked path") {
    KnctTree fig = parse_tree(2, "(((|)|((|)(|)|))|(|))(|(|))");
    KDyckPath path = tree_to_path(fig);
    CHECK(path.encode() == "UUUUDUUUUDUUDUDDUUUDDUUUUDD");
    CHECK(path_to_tree(path) == fig);

    auto [edges, residues] = statistic_transport(fig);
    CHECK(edges == residues);
    CHECK(edges.signature() == "(2,7)");
}

TEST_CASE("round trips and image equality, exhaustively") {
    for (std::size_t k = 2; k <= 3; ++k)
        for (std::size_t m = 0; m <= (k == 2 ? 5u : 4u); ++m) {
            auto trees = collect_trees(k, m);
            auto paths = collect_paths(k, m, 0);
            REQUIRE(trees.size() == paths.size());

            std::set<std::string> path_set;
            for (const auto& p : paths) path_set.insert(p.encode());

            std::set<std::string> image;
            for (const auto& tree : trees) {
                KDyckPath p = tree_to_path(tree);
                CHECK(image.insert(p.encode()).second); // injective
                CHECK(path_to_tree(p) == tree);         // left inverse

                auto [edges, residues] = statistic_transport(tree);
                CHECK(edges == residues);
            }
            CHECK(image == path_set); // surjective onto the t=0 paths

            for (const auto& p : paths)
                CHECK(tree_to_path(path_to_tree(p)) == p); // right inverse
        }
}

TEST_CASE("path_to_tree rejects bounded paths") {
    KDyckPath bounded = parse_path(2, 1, "UDU");
    CHECK_THROWS_AS(path_to_tree(bounded), MalformedPath);
}

TEST_CASE("bounded decomposition on hand-checked inputs") {
    // t = 0: the single component is the path itself
    BoundedDecomposition d0 = decompose_bounded(parse_path(2, 0, "UUD"));
    REQUIRE(d0.components.size() == 1);
    CHECK(d0.components[0].encode() == "UUD");
    CHECK(recombine(d0).encode() == "UUD");

    // UDU dips to -1; stage 1 owns everything after the last climb out
    BoundedDecomposition d1 = decompose_bounded(parse_path(2, 1, "UDU"));
    REQUIRE(d1.components.size() == 2);
    CHECK(d1.components[0].encode() == "");
    CHECK(d1.components[1].encode() == "UUD");
    CHECK(recombine(d1).encode() == "UDU");

    BoundedDecomposition d2 = decompose_bounded(parse_path(3, 2, "UDUU"));
    REQUIRE(d2.components.size() == 3);
    CHECK(d2.components[0].encode() == "");
    CHECK(d2.components[1].encode() == "");
    CHECK(d2.components[2].encode() == "UUUD");
    CHECK(recombine(d2).encode() == "UDUU");
}

TEST_CASE("decompose/recombine round trip and statistic transport") {
    for (std::size_t k = 2; k <= 3; ++k)
        for (std::size_t t = 1; t < k; ++t)
            for (std::size_t m = 0; m <= (k == 2 ? 4u : 3u); ++m)
                for (const auto& p : collect_paths(k, m, t)) {
                    BoundedDecomposition d = decompose_bounded(p);
                    REQUIRE(d.components.size() == t + 1);

                    std::size_t downs = 0;
                    ClassHistogram merged(k);
                    for (std::size_t s = 0; s <= t; ++s) {
                        const KDyckPath& comp = d.components[s];
                        CHECK(comp.t == 0);
                        downs += comp.downs();
                        // component s re-read as a tree at root offset s
                        EdgeClassHist h =
                            edge_class_histogram(path_to_tree(comp), s);
                        for (std::size_t cls = 1; cls <= k; ++cls)
                            merged.at_class(cls) += h.at_class(cls);
                    }
                    CHECK(downs == p.downs());
                    CHECK(merged == residue_histogram(p));
                    CHECK(recombine(d) == p);
                }
}

TEST_CASE("recombine rejects malformed component lists") {
    KDyckPath ok = parse_path(2, 0, "UUD");

    // wrong component count for the declared boundary
    CHECK_THROWS_AS(recombine(BoundedDecomposition{2, 1, {ok}}),
                    MalformedDecomposition);
    // component that is not a valid t = 0 path
    KDyckPath bad{2, 0, {Step::Up, Step::Down}};
    CHECK_THROWS_AS(recombine(BoundedDecomposition{2, 1, {ok, bad}}),
                    MalformedDecomposition);
    CHECK_THROWS_AS(recombine(BoundedDecomposition{2, 2, {ok, ok, ok}}),
                    MalformedDecomposition); // t >= k
}
