#include <doctest.h>

#include <sstream>

#include "kdyck/bigcount.hpp"

using namespace kdyck;

TEST_CASE("construction and string round trip") {
    CHECK(BigCount().str() == "0");
    CHECK(BigCount(42ul).str() == "42");
    CHECK(BigCount(7).str() == "7");
    CHECK_THROWS_AS(BigCount(-1), BadParameters);

    CHECK(BigCount::from_string("0") == BigCount(0ul));
    CHECK(BigCount::from_string("123456789012345678901234567890").str() ==
          "123456789012345678901234567890");
    CHECK_THROWS_AS(BigCount::from_string(""), MalformedInput);
    CHECK_THROWS_AS(BigCount::from_string("12a"), MalformedInput);
    CHECK_THROWS_AS(BigCount::from_string("-5"), MalformedInput);
    CHECK_THROWS_AS(BigCount::from_string(" 5"), MalformedInput);
}

TEST_CASE("u64 conversion") {
    CHECK(BigCount(12345ul).fits_u64());
    CHECK(BigCount(12345ul).as_u64() == 12345u);
    CHECK(BigCount(0ul).as_u64() == 0u);

    BigCount max64 = BigCount::from_string("18446744073709551615"); // 2^64 - 1
    CHECK(max64.fits_u64());
    CHECK(max64.as_u64() == 18446744073709551615ull);

    BigCount over = max64 + BigCount(1ul);
    CHECK_FALSE(over.fits_u64());
    CHECK_THROWS_AS(over.as_u64(), OutOfRange);
}

TEST_CASE("arithmetic and comparisons") {
    BigCount a(10ul), b(4ul);
    CHECK(a + b == BigCount(14ul));
    CHECK(a * b == BigCount(40ul));
    CHECK(checked_sub(a, b) == BigCount(6ul));
    CHECK_THROWS_AS(checked_sub(b, a), BadParameters);
    CHECK(checked_sub(a, a) == BigCount(0ul));

    CHECK(exact_div(a, BigCount(2ul)) == BigCount(5ul));
    CHECK(exact_div(BigCount(0ul), a) == BigCount(0ul));
    CHECK_THROWS_AS(exact_div(a, BigCount(3ul)), NonDivisible);
    CHECK_THROWS_AS(exact_div(a, BigCount(0ul)), NonDivisible);

    CHECK(b < a);
    CHECK(b <= a);
    CHECK(a > b);
    CHECK(a >= a);
    CHECK(a != b);

    std::ostringstream os;
    os << a;
    CHECK(os.str() == "10");
}

TEST_CASE("binomial basics") {
    CHECK(binomial(5, 2) == BigCount(10ul));
    CHECK(binomial(0, 0) == BigCount(1ul));
    CHECK(binomial(7, 0) == BigCount(1ul));
    CHECK(binomial(7, 7) == BigCount(1ul));

    // out-of-range arguments yield zero rather than throwing, so formula
    // code can sum over signatures without guards
    CHECK(binomial(3, 5) == BigCount(0ul));
    CHECK(binomial(3, -1) == BigCount(0ul));
    CHECK(binomial(-1, 0) == BigCount(0ul));
    CHECK(binomial(-4, -4) == BigCount(0ul));
}

TEST_CASE("binomial Pascal identity and symmetry up to 64") {
    for (long long m = 1; m <= 64; ++m)
        for (long long j = 0; j <= m; ++j) {
            CHECK(binomial(m, j) == binomial(m - 1, j - 1) + binomial(m - 1, j));
            CHECK(binomial(m, j) == binomial(m, m - j));
        }
    CHECK(binomial(64, 32).str() == "1832624140942590534");
}
