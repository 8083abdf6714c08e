#include "kdyck/json_io.hpp"

#include <ostream>

#include "kdyck/errors.hpp"

namespace kdyck {

using nlohmann::json;

json path_to_json(const KDyckPath& p) {
    return json{{"k", p.k}, {"t", p.t}, {"steps", p.encode()}};
}

namespace {

std::size_t get_size(const json& j, const char* field) {
    // the parser stores nonnegative literals unsigned, json{{...}} literals
    // signed; accept both
    if (!j.contains(field) || !j[field].is_number_integer())
        throw MalformedInput(std::string("missing or invalid field \"") + field + '"');
    if (j[field].is_number_unsigned()) return j[field].get<std::size_t>();
    long long v = j[field].get<long long>();
    if (v < 0)
        throw MalformedInput(std::string("missing or invalid field \"") + field + '"');
    return static_cast<std::size_t>(v);
}

} // namespace

KDyckPath path_from_json(const json& j) {
    if (!j.is_object()) throw MalformedInput("path JSON must be an object");
    std::size_t k = get_size(j, "k");
    std::size_t t = get_size(j, "t");
    if (!j.contains("steps") || !j["steps"].is_string())
        throw MalformedInput("missing or invalid field \"steps\"");
    return parse_path(k, t, j["steps"].get<std::string>());
}

namespace {

json node_to_json(const KnctNode& node) {
    json groups = json::array();
    for (const auto& g : node.groups) {
        json arr = json::array();
        for (const KnctNode& child : g) arr.push_back(node_to_json(child));
        groups.push_back(std::move(arr));
    }
    return json{{"groups", std::move(groups)}};
}

KnctNode node_from_json(const json& j, std::size_t k) {
    if (!j.is_object() || !j.contains("groups") || !j["groups"].is_array())
        throw MalformedInput("tree node must be an object with a \"groups\" array");
    const json& groups = j["groups"];
    if (groups.size() != k)
        throw MalformedInput("tree node has " + std::to_string(groups.size()) +
                             " groups, expected " + std::to_string(k));
    KnctNode node;
    node.groups.resize(k);
    for (std::size_t g = 0; g < k; ++g) {
        if (!groups[g].is_array())
            throw MalformedInput("tree node group must be an array");
        for (const json& child : groups[g])
            node.groups[g].push_back(node_from_json(child, k));
    }
    return node;
}

} // namespace

json tree_to_json(const KnctTree& t) {
    json root = json::array();
    for (const KnctNode& child : t.rootChildren) root.push_back(node_to_json(child));
    return json{{"k", t.k}, {"root", std::move(root)}};
}

KnctTree tree_from_json(const json& j) {
    if (!j.is_object()) throw MalformedInput("tree JSON must be an object");
    std::size_t k = get_size(j, "k");
    if (k < 2) throw MalformedInput("tree JSON needs k >= 2");
    if (!j.contains("root") || !j["root"].is_array())
        throw MalformedInput("missing or invalid field \"root\"");
    KnctTree tree{k, {}};
    for (const json& child : j["root"])
        tree.rootChildren.push_back(node_from_json(child, k));
    return tree;
}

json coeff_to_json(const MultiPoly& poly, std::size_t zPower) {
    json terms = json::array();
    for (const auto& [e, c] : poly.terms()) {
        if (c < 0)
            throw BadParameters("negative coefficient where a count was expected");
        terms.push_back(json{{"exponents", e}, {"count", c.get_str()}});
    }
    return json{{"z", zPower}, {"terms", std::move(terms)}};
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw MalformedInput("invalid JSON input");
    return j;
}

void write_signature_csv(std::ostream& os, std::size_t k, std::size_t t,
                         std::size_t m, const std::vector<SignatureRow>& rows) {
    os << "k,t,m";
    for (std::size_t i = 1; i <= k; ++i) os << ",a_" << i;
    os << ",count\n";
    for (const auto& [a, count] : rows) {
        os << k << ',' << t << ',' << m;
        for (std::size_t v : a) os << ',' << v;
        os << ',' << count << '\n';
    }
}

json signature_rows_to_json(std::size_t k, std::size_t t, std::size_t m,
                            const std::vector<SignatureRow>& rows) {
    json arr = json::array();
    for (const auto& [a, count] : rows)
        arr.push_back(json{{"signature", a}, {"count", count.str()}});
    return json{{"k", k}, {"t", t}, {"m", m}, {"rows", std::move(arr)}};
}

} // namespace kdyck
