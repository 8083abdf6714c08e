#include "kdyck/bigcount.hpp"

#include <ostream>

namespace kdyck {

BigCount BigCount::from_string(const std::string& dec) {
    if (dec.empty()) throw MalformedInput("empty count literal");
    for (char c : dec)
        if (c < '0' || c > '9')
            throw MalformedInput("count literal is not a decimal string: " + dec);
    mpz_class z;
    if (z.set_str(dec, 10) != 0)
        throw MalformedInput("count literal is not a decimal string: " + dec);
    return BigCount(z);
}

bool BigCount::fits_u64() const {
    return mpz_sizeinbase(v_.get_mpz_t(), 2) <= 64;
}

std::uint64_t BigCount::as_u64() const {
    if (!fits_u64()) throw OutOfRange("count does not fit in 64 bits: " + str());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v_.get_mpz_t());
    return out;
}

BigCount checked_sub(const BigCount& a, const BigCount& b) {
    if (a.v_ < b.v_)
        throw BadParameters("checked_sub would go negative: " + a.str() + " - " + b.str());
    return BigCount(mpz_class(a.v_ - b.v_));
}

BigCount exact_div(const BigCount& a, const BigCount& b) {
    if (b.v_ == 0) throw NonDivisible("division by zero");
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    if (r != 0)
        throw NonDivisible(a.str() + " is not divisible by " + b.str());
    return BigCount(q);
}

std::ostream& operator<<(std::ostream& os, const BigCount& c) {
    return os << c.v_;
}

BigCount binomial(long long m, long long j) {
    if (m < 0 || j < 0 || j > m) return BigCount(0ul);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(m),
                 static_cast<unsigned long>(j));
    return BigCount(z);
}

} // namespace kdyck
