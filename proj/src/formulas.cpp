#include "kdyck/formulas.hpp"

#include <numeric>

#include "kdyck/errors.hpp"

namespace kdyck {

Signature::Signature(std::size_t k, std::vector<std::size_t> a_) : k(k), a(std::move(a_)) {
    if (k < 2) throw BadParameters("signature needs k >= 2, got " + std::to_string(k));
    if (a.size() != k)
        throw BadParameters("signature has " + std::to_string(a.size()) +
                            " entries, expected " + std::to_string(k));
}

std::size_t Signature::N() const {
    return std::accumulate(a.begin(), a.end(), std::size_t{0});
}

ClassHistogram Signature::histogram() const {
    ClassHistogram h(k);
    h.count = a;
    return h;
}

std::vector<Signature> all_signatures(std::size_t k, std::size_t m) {
    std::vector<Signature> out;
    std::vector<std::size_t> a(k, 0);
    // lexicographic walk over all compositions of m into k parts
    auto rec = [&](auto&& self, std::size_t idx, std::size_t left) -> void {
        if (idx + 1 == k) {
            a[idx] = left;
            out.emplace_back(k, a);
            return;
        }
        for (std::size_t take = 0; take <= left; ++take) {
            a[idx] = take;
            self(self, idx + 1, left - take);
        }
    };
    rec(rec, 0, m);
    return out;
}

BigCount nct_bivariate(long long n, long long j) {
    if (n < 2 || j < 0 || j > n - 2)
        throw BadParameters("nct_bivariate needs n >= 2 and 0 <= j <= n-2");
    BigCount num = binomial(n - 2 + j, j) * binomial(2 * n - 2 - j, n - 2 - j);
    return exact_div(num, BigCount(static_cast<unsigned long>(n - 1)));
}

BigCount nct_bivariate_printed(long long n, long long j) {
    if (n < 2 || j < 0 || j > n - 2)
        throw BadParameters("nct_bivariate needs n >= 2 and 0 <= j <= n-2");
    BigCount num = binomial(n - 2 - j, j) * binomial(2 * n - 2 - j, n - 2 - j);
    return exact_div(num, BigCount(static_cast<unsigned long>(n - 1)));
}

BigCount nct_total(long long n) {
    if (n < 1) throw BadParameters("nct_total needs n >= 1");
    return exact_div(binomial(3 * n - 3, n - 1),
                     BigCount(static_cast<unsigned long>(2 * n - 1)));
}

BigCount kdyck_count_t0(const Signature& sig) {
    const long long N = static_cast<long long>(sig.N());
    if (N < 1) throw BadParameters("signature must have at least one down-step");
    BigCount num(1ul);
    for (std::size_t h = 1; h < sig.k; ++h)
        num *= binomial(N - 1 + static_cast<long long>(sig.a[h - 1]),
                        static_cast<long long>(sig.a[h - 1]));
    const long long ak = static_cast<long long>(sig.a[sig.k - 1]);
    num *= binomial(N + ak, ak - 1); // zero when a_k = 0, as it should be
    return exact_div(num, BigCount(static_cast<unsigned long>(N)));
}

BigCount kdyck_count_bounded(std::size_t t, const Signature& sig) {
    if (t >= sig.k)
        throw BadParameters("boundary t must satisfy t < k, got t=" +
                            std::to_string(t) + ", k=" + std::to_string(sig.k));
    const long long N = static_cast<long long>(sig.N());
    if (N < 1) throw BadParameters("signature must have at least one down-step");

    std::size_t marked = 0; // a_{k-t} + ... + a_k
    for (std::size_t l = sig.k - t; l <= sig.k; ++l) marked += sig.a[l - 1];

    BigCount num(static_cast<unsigned long>(marked));
    for (std::size_t h = 1; h + t < sig.k; ++h)
        num *= binomial(N - 1 + static_cast<long long>(sig.a[h - 1]),
                        static_cast<long long>(sig.a[h - 1]));
    for (std::size_t l = sig.k - t; l <= sig.k; ++l)
        num *= binomial(N + static_cast<long long>(sig.a[l - 1]),
                        static_cast<long long>(sig.a[l - 1]));
    return exact_div(num, BigCount(static_cast<unsigned long>(N)) *
                              BigCount(static_cast<unsigned long>(N + 1)));
}

BigCount fuss_catalan(std::size_t k, std::size_t m) {
    if (k < 2) throw BadParameters("k must be at least 2, got " + std::to_string(k));
    return exact_div(binomial(static_cast<long long>((k + 1) * m),
                              static_cast<long long>(m)),
                     BigCount(static_cast<unsigned long>(k * m + 1)));
}

} // namespace kdyck
