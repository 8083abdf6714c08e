#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace kdyck {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    std::size_t k_max = 3;           // signature/bijection sweeps run k = 2..k_max
    std::size_t m_max = 5;           // down-steps per sweep cell
    std::size_t geometric_n_max = 8; // bivariate cells run n = 2..geometric_n_max
    std::size_t series_order = 8;    // substitution check order
    bool use_printed_bivariate = false; // document the wrong printed variant instead
    bool has_k_only = false;         // restrict sweeps to a single k
    std::size_t k_only = 0;
    bool has_m_only = false;         // restrict sweeps to a single m
    std::size_t m_only = 0;
    unsigned threads = 0;            // 0 = effective_threads()
};

// Exhaustive oracle: signature -> number of (k,t)-paths with m down-steps
// having that residue histogram.
std::map<std::vector<std::size_t>, unsigned long long>
census_paths(std::size_t k, std::size_t m, std::size_t t);

// One cell per n: closed form against the geometric oracle, per left-edge
// count, plus the row-sum identity.  printed_variant swaps in the wrong
// binomial so the report can document where it breaks.
std::vector<CheckResult> check_bivariate(std::size_t n_max, bool printed_variant);

// One cell per m <= m_max for fixed (k, t): triple equivalence of the
// closed form, the exhaustive census, and the series coefficient.
std::vector<CheckResult> check_signature_sweep(std::size_t k, std::size_t t,
                                               std::size_t m_max);

// One cell per m: bijection round-trips, image equality, statistic
// preservation, and the rotation consistency.
std::vector<CheckResult> check_bijection(std::size_t k, std::size_t m_max);

// One cell per m for fixed (k, t >= 1): decompose/recombine round-trip and
// the bounded statistic-transport identity.
std::vector<CheckResult> check_bounded_transport(std::size_t k, std::size_t t,
                                                 std::size_t m_max);

// One cell per k: the substitution identity B(z(v)) = v.
std::vector<CheckResult> check_substitution(std::size_t k_max, std::size_t order);

// The full battery in deterministic order, cells fanned out over threads.
std::vector<CheckResult> run_verify(const VerifyOptions& opt);

} // namespace kdyck
