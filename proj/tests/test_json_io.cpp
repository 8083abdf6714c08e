#include <doctest.h>

#include <sstream>

#include "kdyck/json_io.hpp"
#include "kdyck/series.hpp"

using namespace kdyck;

TEST_CASE("path JSON round trip") {
    KDyckPath p = parse_path(2, 1, "UDUUDU");
    nlohmann::json j = path_to_json(p);
    CHECK(j["k"] == 2);
    CHECK(j["t"] == 1);
    CHECK(j["steps"] == "UDUUDU");
    CHECK(path_from_json(j) == p);

    CHECK_THROWS_AS(path_from_json(nlohmann::json::array()), MalformedInput);
    CHECK_THROWS_AS(path_from_json(nlohmann::json{{"k", 2}, {"t", 0}}),
                    MalformedInput);
    CHECK_THROWS_AS(
        path_from_json(nlohmann::json{{"k", 2}, {"t", 0}, {"steps", "UXD"}}),
        MalformedPath);
    CHECK_THROWS_AS(
        path_from_json(nlohmann::json{{"k", -2}, {"t", 0}, {"steps", ""}}),
        MalformedInput);
}

TEST_CASE("tree JSON round trip") {
    for (std::size_t k = 2; k <= 3; ++k)
        for (std::size_t m = 0; m <= 3; ++m)
            for (const auto& t : collect_trees(k, m)) {
                nlohmann::json j = tree_to_json(t);
                CHECK(j["k"] == k);
                CHECK(tree_from_json(j) == t);
            }

    nlohmann::json leaf = tree_to_json(parse_tree(2, "(|)"));
    CHECK(leaf["root"].size() == 1);
    CHECK(leaf["root"][0]["groups"].size() == 2);

    CHECK_THROWS_AS(tree_from_json(nlohmann::json{{"k", 1}, {"root", {}}}),
                    MalformedInput);
    nlohmann::json wrong_arity{
        {"k", 3},
        {"root", nlohmann::json::array(
                     {nlohmann::json{{"groups", nlohmann::json::array(
                                                    {nlohmann::json::array(),
                                                     nlohmann::json::array()})}}})}};
    CHECK_THROWS_AS(tree_from_json(wrong_arity), MalformedInput);
}

TEST_CASE("series coefficient JSON") {
    ZSeries F = tree_gf(2, 0, 3);
    nlohmann::json j = coeff_to_json(coeff(F, 3), 3);
    CHECK(j["z"] == 3);
    REQUIRE(j["terms"].size() == 2);
    // exponent-lexicographic order with decimal-string counts
    CHECK(j["terms"][0]["exponents"] == nlohmann::json::array({0, 2}));
    CHECK(j["terms"][0]["count"] == "2");
    CHECK(j["terms"][1]["exponents"] == nlohmann::json::array({1, 1}));
    CHECK(j["terms"][1]["count"] == "1");

    nlohmann::json zero = coeff_to_json(coeff(F, 0), 0);
    CHECK(zero["terms"].empty());
}

TEST_CASE("parse_json accepts objects and rejects junk") {
    CHECK(parse_json("{\"k\": 2}")["k"] == 2);
    CHECK_THROWS_AS(parse_json("not json"), MalformedInput);
    CHECK_THROWS_AS(parse_json("{"), MalformedInput);
}

TEST_CASE("signature CSV golden output") {
    std::vector<SignatureRow> rows = {{{0, 2}, BigCount(2ul)},
                                      {{1, 1}, BigCount(1ul)}};
    std::ostringstream os;
    write_signature_csv(os, 2, 0, 2, rows);
    CHECK(os.str() ==
          "k,t,m,a_1,a_2,count\n"
          "2,0,2,0,2,2\n"
          "2,0,2,1,1,1\n");
}

TEST_CASE("signature rows JSON shape") {
    std::vector<SignatureRow> rows = {{{1, 1}, BigCount(3ul)}};
    nlohmann::json j = signature_rows_to_json(2, 1, 2, rows);
    CHECK(j["k"] == 2);
    CHECK(j["t"] == 1);
    CHECK(j["m"] == 2);
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["signature"] == nlohmann::json::array({1, 1}));
    CHECK(j["rows"][0]["count"] == "3");
}
