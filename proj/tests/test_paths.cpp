#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "kdyck/formulas.hpp"
#include "kdyck/paths.hpp"

using namespace kdyck;

namespace {

std::vector<std::string> encodings(const std::vector<KDyckPath>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.encode());
    return out;
}

// lexicographic with Up before Down, the enumeration's promised order
bool up_first_less(const std::string& a, const std::string& b) {
    auto rank = [](char c) { return c == 'U' ? 0 : 1; };
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [&](char x, char y) { return rank(x) < rank(y); });
}

} // namespace

TEST_CASE("validate accepts and rejects") {
    KDyckPath p = parse_path(2, 0, "UUD");
    CHECK(p.k == 2);
    CHECK(p.t == 0);
    CHECK(p.downs() == 1);
    CHECK(p.ups() == 2);
    CHECK(p.encode() == "UUD");

    CHECK(parse_path(2, 0, "").encode() == "");
    CHECK(parse_path(3, 2, "UDUU").encode() == "UDUU");

    CHECK_THROWS_AS(parse_path(1, 0, "U"), BadParameters);   // k < 2
    CHECK_THROWS_AS(parse_path(2, 2, "UUD"), BadParameters); // t >= k
    CHECK_THROWS_AS(parse_path(2, 0, "UD"), BoundaryViolation);
    CHECK_THROWS_AS(parse_path(2, 1, "UDUD"), BoundaryViolation); // dips to -2
    CHECK_THROWS_AS(parse_path(2, 0, "UU"), EndpointViolation);
    CHECK_THROWS_AS(parse_path(2, 0, "UUDU"), EndpointViolation);
    CHECK_THROWS_AS(parse_path(2, 0, "UXD"), MalformedPath);
    CHECK(parse_path(2, 0, " U U\nD ").encode() == "UUD"); // whitespace ignored
}

TEST_CASE("level profile") {
    CHECK(level_profile(parse_path(2, 0, "UUD")) ==
          std::vector<long long>{1, 2, 0});
    CHECK(level_profile(parse_path(2, 1, "UDU")) ==
          std::vector<long long>{1, -1, 0});
    CHECK(level_profile(parse_path(3, 0, "UUUD")) ==
          std::vector<long long>{1, 2, 3, 0});
}

TEST_CASE("residue histogram") {
    ResidueStats h = residue_histogram(parse_path(2, 0, "UUD"));
    CHECK(h.count == std::vector<std::size_t>{0, 1}); // lands 0, class 2

    h = residue_histogram(parse_path(2, 0, "UUUDUD"));
    CHECK(h.count == std::vector<std::size_t>{1, 1}); // lands 1 then 0

    h = residue_histogram(parse_path(2, 1, "UDU"));
    CHECK(h.count == std::vector<std::size_t>{1, 0}); // lands -1, class 1

    // the 27-step 2-Dyck example: nine down-steps, two landing odd
    h = residue_histogram(parse_path(2, 0, "UUUUDUUUUDUUDUDDUUUDDUUUUDD"));
    CHECK(h.signature() == "(2,7)");

    // the 40-step 3-Dyck example: landings 3,5,2,0,2,3,1,6,3,0
    h = residue_histogram(
        parse_path(3, 0, "UUUUUUDUUUUUDDUDUUUUUDUUUUDUDUUUUUUUUDDD"));
    CHECK(h.signature() == "(1,3,6)");
}

TEST_CASE("class_of_level") {
    CHECK(ClassHistogram::class_of_level(0, 2) == 2);
    CHECK(ClassHistogram::class_of_level(1, 2) == 1);
    CHECK(ClassHistogram::class_of_level(-1, 2) == 1);
    CHECK(ClassHistogram::class_of_level(-2, 2) == 2);
    CHECK(ClassHistogram::class_of_level(6, 3) == 3);
    CHECK(ClassHistogram::class_of_level(-2, 3) == 1);
    CHECK(ClassHistogram::class_of_level(-1, 3) == 2);
}

TEST_CASE("enumerate small sets") {
    CHECK(encodings(collect_paths(2, 0, 0)) == std::vector<std::string>{""});
    CHECK(encodings(collect_paths(2, 1, 0)) == std::vector<std::string>{"UUD"});
    CHECK(encodings(collect_paths(2, 1, 1)) ==
          std::vector<std::string>{"UUD", "UDU"});
    CHECK(encodings(collect_paths(2, 2, 0)) ==
          std::vector<std::string>{"UUUUDD", "UUUDUD", "UUDUUD"});

    // boundary t=1 admits exactly seven paths at m=2
    CHECK(collect_paths(2, 2, 1).size() == 7);

    CHECK_THROWS_AS(collect_paths(1, 2, 0), BadParameters);
    CHECK_THROWS_AS(collect_paths(2, 2, 2), BadParameters);
}

TEST_CASE("enumeration is sorted, duplicate-free, Fuss-Catalan sized") {
    for (std::size_t k = 2; k <= 4; ++k)
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t m = 0; m <= (k == 2 ? 5u : 3u); ++m) {
                auto paths = collect_paths(k, m, t);
                for (const auto& p : paths) {
                    CHECK(p.k == k);
                    CHECK(p.t == t);
                    CHECK(p.downs() == m);
                }
                auto enc = encodings(paths);
                CHECK(std::is_sorted(enc.begin(), enc.end(), up_first_less));
                CHECK(std::set<std::string>(enc.begin(), enc.end()).size() ==
                      enc.size());
                if (t == 0)
                    CHECK(BigCount((unsigned long)paths.size()) ==
                          fuss_catalan(k, m));
            }
}

TEST_CASE("parallel enumeration matches serial") {
    for (unsigned threads : {1u, 2u, 5u}) {
        for (auto [k, m, t] : {std::tuple<std::size_t, std::size_t, std::size_t>{2, 4, 0},
                               {2, 4, 1},
                               {3, 3, 2}}) {
            std::vector<std::string> par;
            enumerate_paths_parallel(
                k, m, t, [&](const KDyckPath& p) { par.push_back(p.encode()); },
                threads);
            CHECK(par == encodings(collect_paths(k, m, t)));
        }
    }
}

TEST_CASE("histogram-constrained counting") {
    CHECK(count_paths_with_histogram(2, 0, {0, 2}) == 2);
    CHECK(count_paths_with_histogram(2, 0, {1, 1}) == 1);
    CHECK(count_paths_with_histogram(2, 0, {2, 0}) == 0);
    CHECK(count_paths_with_histogram(2, 1, {1, 1}) == 3);
    CHECK(count_paths_with_histogram(3, 0, {0, 0, 1}) == 1);

    // cross-check against the census for a full cell
    unsigned long long total = 0;
    for (const Signature& sig : all_signatures(2, 4))
        total += count_paths_with_histogram(2, 0, sig.a);
    CHECK(BigCount((unsigned long)total) == fuss_catalan(2, 4));

    CHECK_THROWS_AS(count_paths_with_histogram(2, 0, {1}), BadParameters);
    CHECK_THROWS_AS(count_paths_with_histogram(2, 2, {1, 1}), BadParameters);
}
