#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "kdyck/errors.hpp"

namespace kdyck {

// Tally over the k residue classes 1..k.  Slot i (0-based) holds class i+1;
// the last slot is class k, which is residue 0 mod k.  The same shape serves
// as the edge-class histogram on the tree side, and the central consistency
// checks compare the two for equality.
struct ClassHistogram {
    std::vector<std::size_t> count; // size k

    ClassHistogram() = default;
    explicit ClassHistogram(std::size_t k) : count(k, 0) {
        if (k == 0) throw BadParameters("histogram needs k >= 1");
    }

    std::size_t k() const { return count.size(); }

    std::size_t& at_class(std::size_t cls) {
        check(cls);
        return count[cls - 1];
    }
    std::size_t at_class(std::size_t cls) const {
        check(cls);
        return count[cls - 1];
    }

    std::size_t total() const {
        return std::accumulate(count.begin(), count.end(), std::size_t{0});
    }

    // Residue class of a landing level: level L has class k when L = 0 mod k,
    // otherwise class L mod k (taken in 1..k-1, correct for negative L too).
    static std::size_t class_of_level(long long level, std::size_t k) {
        if (k == 0) throw BadParameters("class_of_level needs k >= 1");
        long long r = level % static_cast<long long>(k);
        if (r < 0) r += static_cast<long long>(k);
        return r == 0 ? k : static_cast<std::size_t>(r);
    }

    // "(a_1,...,a_k)" -- the display order used in tables and filenames.
    std::string signature() const {
        std::string out = "(";
        for (std::size_t i = 0; i < count.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(count[i]);
        }
        out += ')';
        return out;
    }

    friend bool operator==(const ClassHistogram&, const ClassHistogram&) = default;

private:
    void check(std::size_t cls) const {
        if (cls < 1 || cls > count.size())
            throw OutOfRange("class index out of range: " + std::to_string(cls));
    }
};

using ResidueStats = ClassHistogram;  // down-step landing residues of a path
using EdgeClassHist = ClassHistogram; // edge classes of a butterfly tree

} // namespace kdyck
