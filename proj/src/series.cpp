#include "kdyck/series.hpp"

#include "kdyck/errors.hpp"

namespace kdyck {

// -- MultiPoly --

MultiPoly MultiPoly::constant(std::size_t k, long v) {
    MultiPoly p(k);
    if (v != 0) p.terms_[Exponents(k, 0)] = v;
    return p;
}

MultiPoly MultiPoly::marker(std::size_t k, std::size_t idx) {
    if (idx < 1 || idx > k)
        throw BadParameters("marker index out of range: " + std::to_string(idx));
    MultiPoly p(k);
    Exponents e(k, 0);
    e[idx - 1] = 1;
    p.terms_[e] = 1;
    return p;
}

void MultiPoly::add_term(const Exponents& e, const mpz_class& c) {
    if (e.size() != k_)
        throw BadParameters("exponent vector has wrong arity");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigCount MultiPoly::count_at(const Exponents& e) const {
    if (e.size() != k_)
        throw BadParameters("exponent vector has wrong arity");
    auto it = terms_.find(e);
    if (it == terms_.end()) return BigCount(0ul);
    if (it->second < 0)
        throw BadParameters("negative coefficient where a count was expected");
    return BigCount(it->second);
}

BigCount MultiPoly::total_count() const {
    mpz_class sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    if (sum < 0)
        throw BadParameters("negative total where a count was expected");
    return BigCount(sum);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (k_ != o.k_) throw OrderMismatch("adding polynomials of different arity");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (k_ != o.k_) throw OrderMismatch("subtracting polynomials of different arity");
    for (const auto& [e, c] : o.terms_) add_term(e, mpz_class(-c));
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.k_ != b.k_) throw OrderMismatch("multiplying polynomials of different arity");
    MultiPoly out(a.k_);
    MultiPoly::Exponents e(a.k_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < a.k_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

// -- ZSeries --

ZSeries::ZSeries(std::size_t k, std::size_t order)
    : k(k), order(order), coeffs(order + 1, MultiPoly(k)) {}

ZSeries ZSeries::one(std::size_t k, std::size_t order) {
    ZSeries s(k, order);
    s.coeffs[0] = MultiPoly::constant(k, 1);
    return s;
}

ZSeries ZSeries::identity(std::size_t k, std::size_t order) {
    if (order < 1) throw BadParameters("identity series needs order >= 1");
    ZSeries s(k, order);
    s.coeffs[1] = MultiPoly::constant(k, 1);
    return s;
}

namespace {

void check_compatible(const ZSeries& x, const ZSeries& y) {
    if (x.order != y.order)
        throw OrderMismatch("series orders differ: " + std::to_string(x.order) +
                            " vs " + std::to_string(y.order));
    if (x.k != y.k)
        throw OrderMismatch("series marker arities differ: " + std::to_string(x.k) +
                            " vs " + std::to_string(y.k));
}

} // namespace

ZSeries add(const ZSeries& x, const ZSeries& y) {
    check_compatible(x, y);
    ZSeries out = x;
    for (std::size_t i = 0; i <= out.order; ++i) out.coeffs[i] += y.coeffs[i];
    return out;
}

ZSeries subtract(const ZSeries& x, const ZSeries& y) {
    check_compatible(x, y);
    ZSeries out = x;
    for (std::size_t i = 0; i <= out.order; ++i) out.coeffs[i] -= y.coeffs[i];
    return out;
}

ZSeries multiply(const ZSeries& x, const ZSeries& y) {
    check_compatible(x, y);
    ZSeries out(x.k, x.order);
    for (std::size_t i = 0; i <= x.order; ++i) {
        if (x.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= x.order; ++j) {
            if (y.coeffs[j].is_zero()) continue;
            out.coeffs[i + j] += x.coeffs[i] * y.coeffs[j];
        }
    }
    return out;
}

ZSeries reciprocal(const ZSeries& x) {
    if (x.coeffs[0] != MultiPoly::constant(x.k, 1))
        throw NonUnitConstantTerm("reciprocal needs constant term exactly 1");
    // y_0 = 1; y_n = -sum_{i=1..n} x_i y_{n-i}
    ZSeries out = ZSeries::one(x.k, x.order);
    for (std::size_t n = 1; n <= x.order; ++n) {
        MultiPoly acc(x.k);
        for (std::size_t i = 1; i <= n; ++i) {
            if (x.coeffs[i].is_zero() || out.coeffs[n - i].is_zero()) continue;
            acc += x.coeffs[i] * out.coeffs[n - i];
        }
        out.coeffs[n] = MultiPoly(x.k) - acc;
    }
    return out;
}

ZSeries shift(const ZSeries& x, std::size_t powers) {
    ZSeries out(x.k, x.order);
    for (std::size_t i = powers; i <= x.order; ++i)
        out.coeffs[i] = x.coeffs[i - powers];
    return out;
}

ZSeries scale(const ZSeries& x, const MultiPoly& p) {
    ZSeries out(x.k, x.order);
    for (std::size_t i = 0; i <= x.order; ++i)
        if (!x.coeffs[i].is_zero()) out.coeffs[i] = x.coeffs[i] * p;
    return out;
}

const MultiPoly& coeff(const ZSeries& s, std::size_t zPower) {
    if (zPower > s.order)
        throw OutOfRange("coefficient of power " + std::to_string(zPower) +
                         " requested from a series of order " +
                         std::to_string(s.order));
    return s.coeffs[zPower];
}

// -- The butterfly fixed point and its consequences --

ZSeries solve_butterfly(std::size_t k, std::size_t order) {
    if (k < 2) throw BadParameters("k must be at least 2, got " + std::to_string(k));
    if (order < 1) throw BadParameters("order must be at least 1");
    const ZSeries one = ZSeries::one(k, order);
    ZSeries B(k, order);
    // each pass fixes at least one more power of z
    for (std::size_t pass = 0; pass <= order; ++pass) {
        ZSeries prod = one;
        for (std::size_t j = 1; j <= k; ++j)
            prod = multiply(prod,
                            reciprocal(subtract(one, scale(B, MultiPoly::marker(k, j)))));
        ZSeries next = shift(prod, 1);
        if (next == B) break;
        B = std::move(next);
    }
    return B;
}

bool verify_substitution(std::size_t k, std::size_t order) {
    ZSeries B = solve_butterfly(k, order);
    // z(v) = v * prod_j (1 - r_j v), as a series in v
    const ZSeries one = ZSeries::one(k, order);
    ZSeries zv = ZSeries::identity(k, order);
    for (std::size_t j = 1; j <= k; ++j)
        zv = multiply(zv, subtract(one, scale(ZSeries::identity(k, order),
                                              MultiPoly::marker(k, j))));
    // B(z(v)) = sum_n B_n z(v)^n, truncated in v
    ZSeries result(k, order);
    ZSeries power = one;
    for (std::size_t n = 1; n <= order; ++n) {
        power = multiply(power, zv);
        if (!B.coeffs[n].is_zero()) result = add(result, scale(power, B.coeffs[n]));
    }
    return result == ZSeries::identity(k, order);
}

ZSeries tree_gf(std::size_t k, std::size_t t, std::size_t order) {
    if (k < 2) throw BadParameters("k must be at least 2, got " + std::to_string(k));
    if (t >= k)
        throw BadParameters("boundary t must satisfy t < k, got t=" +
                            std::to_string(t) + ", k=" + std::to_string(k));
    if (order < t + 1)
        throw BadParameters("order too small for the z^{t+1} prefactor");
    ZSeries B = solve_butterfly(k, order);
    const ZSeries one = ZSeries::one(k, order);
    ZSeries prod = one;
    for (std::size_t j = k - t; j <= k; ++j)
        prod = multiply(prod,
                        reciprocal(subtract(one, scale(B, MultiPoly::marker(k, j)))));
    return shift(prod, t + 1);
}

} // namespace kdyck
