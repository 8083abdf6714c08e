#pragma once

#include <cstddef>
#include <vector>

#include "kdyck/bigcount.hpp"
#include "kdyck/histogram.hpp"

namespace kdyck {

// Residue-class signature (a_1,...,a_k); N = sum = number of down-steps.
struct Signature {
    std::size_t k = 2;
    std::vector<std::size_t> a;

    Signature(std::size_t k, std::vector<std::size_t> a);
    explicit Signature(const ClassHistogram& h)
        : Signature(h.k(), h.count) {}

    std::size_t N() const;
    ClassHistogram histogram() const;
};

// Every signature over k classes with sum m, lexicographic on (a_1,...,a_k).
std::vector<Signature> all_signatures(std::size_t k, std::size_t m);

// Number of non-crossing trees with n nodes and j left edges:
// (1/(n-1)) * C(n-2+j, j) * C(2n-2-j, n-2-j).
BigCount nct_bivariate(long long n, long long j);

// Variant with the first factor read as C(n-2-j, j) instead.  Wrong — it
// disagrees with the geometric oracle at n = 3 and cannot even divide
// exactly at n = 4 — but kept so the verification report can document the
// disagreement next to the correct form.
BigCount nct_bivariate_printed(long long n, long long j);

// Total non-crossing trees on n nodes: (1/(2n-1)) * C(3n-3, n-1).
BigCount nct_total(long long n);

// k-Dyck paths (t = 0) with residue signature a:
// (1/N) * prod_{h<k} C(N-1+a_h, a_h) * C(N+a_k, a_k - 1).
BigCount kdyck_count_t0(const Signature& sig);

// Paths bounded below by -t with signature a:
// (a_{k-t}+...+a_k) / (N(N+1)) * prod_{h=1}^{k-t-1} C(N-1+a_h, a_h)
//                              * prod_{l=k-t}^{k} C(N+a_l, a_l).
BigCount kdyck_count_bounded(std::size_t t, const Signature& sig);

// C((k+1)m, m) / (km+1): total k-Dyck paths with m down-steps.
BigCount fuss_catalan(std::size_t k, std::size_t m);

} // namespace kdyck
