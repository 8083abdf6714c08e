#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "kdyck/bigcount.hpp"
#include "kdyck/histogram.hpp"

namespace kdyck {

// Sparse polynomial in the markers r_1..r_k.  Coefficients are signed
// exact integers internally — intermediates like 1 - r_1 B and the
// substitution z(v) = v(1-r_1 v)...(1-r_k v) need cancellation — but every
// coefficient extracted as a count is checked nonnegative at that surface.
// Invariant: no zero coefficients stored.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t k) : k_(k) {}
    static MultiPoly constant(std::size_t k, long v);
    // the single marker r_idx (1-based)
    static MultiPoly marker(std::size_t k, std::size_t idx);

    std::size_t k() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const std::map<Exponents, mpz_class>& terms() const { return terms_; }

    void add_term(const Exponents& e, const mpz_class& c);

    // coefficient of the monomial r^e as a count; throws BadParameters if
    // the stored value is negative (a bug by construction)
    BigCount count_at(const Exponents& e) const;
    // all markers set to 1
    BigCount total_count() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    std::size_t k_ = 0;
    std::map<Exponents, mpz_class> terms_;
};

// Truncated power series in one formal variable (z or v) with MultiPoly
// coefficients; coeffs has exactly order+1 entries.
struct ZSeries {
    std::size_t k = 0;
    std::size_t order = 0;
    std::vector<MultiPoly> coeffs;

    ZSeries() = default;
    ZSeries(std::size_t k, std::size_t order);

    static ZSeries one(std::size_t k, std::size_t order);
    // the identity series z (coefficient 1 at power 1)
    static ZSeries identity(std::size_t k, std::size_t order);

    friend bool operator==(const ZSeries&, const ZSeries&) = default;
};

// Truncated ring operations; throw OrderMismatch on incompatible operands
// and NonUnitConstantTerm when reciprocal's input does not start with 1.
ZSeries add(const ZSeries& x, const ZSeries& y);
ZSeries subtract(const ZSeries& x, const ZSeries& y);
ZSeries multiply(const ZSeries& x, const ZSeries& y);
ZSeries reciprocal(const ZSeries& x);

// x shifted up by `powers` of the formal variable (truncated).
ZSeries shift(const ZSeries& x, std::size_t powers);
// x with every coefficient multiplied by the polynomial p.
ZSeries scale(const ZSeries& x, const MultiPoly& p);

// coefficient of the zPower-th power; throws OutOfRange past the order
const MultiPoly& coeff(const ZSeries& s, std::size_t zPower);

// The unique zero-constant-term solution of B = z / prod_j (1 - r_j B),
// mod z^{order+1}, by fixed-point iteration from B = 0.
ZSeries solve_butterfly(std::size_t k, std::size_t order);

// Substitutes z(v) = v * prod_j (1 - r_j v) into B and checks the result
// collapses back to the identity series v, exactly, mod v^{order+1}.
bool verify_substitution(std::size_t k, std::size_t order);

// Marked generating function for paths bounded below by -t:
// F = z^{t+1} * prod_{j=k-t}^{k} 1/(1 - r_j B); the coefficient of
// z^{N+t+1} refines the paths with N down-steps by signature.
ZSeries tree_gf(std::size_t k, std::size_t t, std::size_t order);

} // namespace kdyck
