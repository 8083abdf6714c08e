#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "kdyck/errors.hpp"

namespace kdyck {

// Exact nonnegative integer used for every count this library reports.
// Thin wrapper over an arbitrary-precision integer that enforces the
// "counts never go negative and never divide inexactly" discipline.
class BigCount {
public:
    BigCount() : v_(0) {}
    BigCount(unsigned long n) : v_(n) {}
    BigCount(int n) : v_(n) {
        if (n < 0) throw BadParameters("BigCount from negative int");
    }
    explicit BigCount(const mpz_class& z) : v_(z) {
        if (v_ < 0) throw BadParameters("BigCount from negative value");
    }
    static BigCount from_string(const std::string& dec);

    const mpz_class& raw() const { return v_; }
    std::string str() const { return v_.get_str(); }
    bool fits_u64() const;
    std::uint64_t as_u64() const;

    BigCount& operator+=(const BigCount& o) { v_ += o.v_; return *this; }
    BigCount& operator*=(const BigCount& o) { v_ *= o.v_; return *this; }
    friend BigCount operator+(BigCount a, const BigCount& b) { a += b; return a; }
    friend BigCount operator*(BigCount a, const BigCount& b) { a *= b; return a; }

    // a - b, throwing if the result would be negative.
    friend BigCount checked_sub(const BigCount& a, const BigCount& b);
    // a / b, throwing NonDivisible on a nonzero remainder.
    friend BigCount exact_div(const BigCount& a, const BigCount& b);

    friend bool operator==(const BigCount& a, const BigCount& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigCount& a, const BigCount& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigCount& a, const BigCount& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigCount& a, const BigCount& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigCount& a, const BigCount& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigCount& a, const BigCount& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const BigCount& c);

private:
    mpz_class v_;
};

// C(m, j); zero whenever j < 0, j > m, or m < 0, so formula code can sum
// over signatures without guarding edge cases.
BigCount binomial(long long m, long long j);

} // namespace kdyck
