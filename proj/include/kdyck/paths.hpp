#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "kdyck/histogram.hpp"

namespace kdyck {

enum class Step : unsigned char { Up, Down };

// A k-Dyck path: up-steps (1,1) and down-steps (1,-k), starting and ending
// at level 0, with every prefix level >= -t for a boundary 0 <= t < k.
// Construct through validate() / parse_path(); the invariants then hold.
struct KDyckPath {
    std::size_t k = 2;
    std::size_t t = 0;
    std::vector<Step> steps;

    std::size_t downs() const;
    std::size_t ups() const { return steps.size() - downs(); }

    // "UUDUUD..." text form.
    std::string encode() const;

    friend bool operator==(const KDyckPath&, const KDyckPath&) = default;
    friend bool operator<(const KDyckPath& a, const KDyckPath& b) {
        return a.encode() < b.encode();
    }
};

// Checks all path invariants and returns the path; throws BadParameters,
// BoundaryViolation, or EndpointViolation.
KDyckPath validate(std::size_t k, std::size_t t, std::vector<Step> steps);

// Parses "UUD..." (whitespace ignored) and validates; throws MalformedPath
// on any other character.
KDyckPath parse_path(std::size_t k, std::size_t t, const std::string& text);

// Levels after each step; last entry 0, minimum >= -t.
std::vector<long long> level_profile(const KDyckPath& p);

// a_i = number of down-steps landing on a level congruent to i mod k
// (residue 0 stored at index k).
ResidueStats residue_histogram(const KDyckPath& p);

// Streams every path with m down-steps for (k, t), each exactly once, in
// lexicographic order with Up < Down.  Throws BadParameters.
void enumerate_paths(std::size_t k, std::size_t m, std::size_t t,
                     const std::function<void(const KDyckPath&)>& yield);

// Convenience collector over the stream above.
std::vector<KDyckPath> collect_paths(std::size_t k, std::size_t m, std::size_t t);

// Same stream, fanned out across worker threads by fixed-depth prefix
// splitting; yield still runs on the calling thread in lexicographic order.
void enumerate_paths_parallel(std::size_t k, std::size_t m, std::size_t t,
                              const std::function<void(const KDyckPath&)>& yield,
                              unsigned threads);

// Counts the (k,t)-paths whose residue histogram equals target exactly,
// pruning on the per-class budget instead of materializing anything.
// The spot-check oracle for single large signatures.
unsigned long long count_paths_with_histogram(std::size_t k, std::size_t t,
                                              const std::vector<std::size_t>& target);

} // namespace kdyck
