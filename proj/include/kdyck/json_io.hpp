#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kdyck/bigcount.hpp"
#include "kdyck/paths.hpp"
#include "kdyck/series.hpp"
#include "kdyck/trees.hpp"

namespace kdyck {

// {"k": k, "t": t, "steps": "UUD..."}
nlohmann::json path_to_json(const KDyckPath& p);
KDyckPath path_from_json(const nlohmann::json& j);

// {"k": k, "root": [node...]}, node = {"groups": [[node...], ...]}
nlohmann::json tree_to_json(const KnctTree& t);
KnctTree tree_from_json(const nlohmann::json& j);

// {"z": zPower, "terms": [{"exponents": [...], "count": "<decimal>"}]}
// Terms in exponent-lexicographic order; counts as decimal strings.
nlohmann::json coeff_to_json(const MultiPoly& poly, std::size_t zPower);

// Parses either serialization (helpful at the CLI surface); throws
// MalformedInput on anything else.
nlohmann::json parse_json(const std::string& text);

using SignatureRow = std::pair<std::vector<std::size_t>, BigCount>;

// CSV schema: k,t,m,a_1..a_k,count — fixed column order.
void write_signature_csv(std::ostream& os, std::size_t k, std::size_t t,
                         std::size_t m, const std::vector<SignatureRow>& rows);

nlohmann::json signature_rows_to_json(std::size_t k, std::size_t t, std::size_t m,
                                      const std::vector<SignatureRow>& rows);

} // namespace kdyck
