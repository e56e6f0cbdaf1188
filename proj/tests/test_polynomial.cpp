#include "doctest.h"
#include "ribbonroots/errors.hpp"
#include "ribbonroots/polynomial.hpp"

using namespace ribbonroots;

namespace {
Rational q(long n, long d = 1) { return make_rational(n, d); }
}  // namespace

TEST_CASE("construction trims and evaluates exactly") {
    const RationalPolynomial p{q(1), q(-3), q(2), q(0)};
    CHECK(p.degree() == 2);
    CHECK(p(q(1)) == 0);
    CHECK(p(q(1, 2)) == 0);
    CHECK(p(q(3)) == 10);
    CHECK(RationalPolynomial().degree() == -1);
    CHECK_THROWS_AS(RationalPolynomial().leading(), DomainError);
}

TEST_CASE("products of shifts and Taylor shift") {
    const long shifts[] = {1, 2, 3};
    const RationalPolynomial p = RationalPolynomial::product_of_shifts(shifts);
    CHECK(p == RationalPolynomial{q(6), q(11), q(6), q(1)});
    // p(x - 1) = x (x + 1) (x + 2)
    CHECK(p.shifted(q(-1)) == RationalPolynomial{q(0), q(2), q(3), q(1)});
    for (int x = -4; x <= 4; ++x) CHECK(p.shifted(q(5, 3))(q(x)) == p(q(x) + q(5, 3)));
}

TEST_CASE("exact deflation") {
    const long shifts[] = {-2, 5};
    const RationalPolynomial p = RationalPolynomial::product_of_shifts(shifts);
    CHECK(p.deflate(q(2)) == RationalPolynomial::linear(q(5)));
    CHECK_THROWS_AS(p.deflate(q(1)), DomainError);
}

TEST_CASE("arithmetic") {
    const RationalPolynomial a{q(1), q(1)}, b{q(-1), q(1)};
    CHECK(a * b == RationalPolynomial{q(-1), q(0), q(1)});
    CHECK(a + b == RationalPolynomial{q(0), q(2)});
    CHECK((a + b * q(-1)) == RationalPolynomial::constant(q(2)));
    CHECK((a * q(0)).is_zero());
}

TEST_CASE("printing and integer normalization") {
    const RationalPolynomial p{q(1), q(-1, 2), q(3, 4)};
    CHECK(to_string(p, "N") == "3/4*N^2 - 1/2*N + 1");
    CHECK(common_denominator(p) == 4);
    CHECK(integer_coefficients(p) == std::vector<BigInt>{4, -2, 3});
    CHECK(to_string(RationalPolynomial()) == "0");
}

TEST_CASE("extended precision conversion") {
    CHECK(to_long_double(q(1, 3)) == doctest::Approx(1.0 / 3).epsilon(1e-15));
    const Rational huge(BigInt("123456789012345678901234567890"), BigInt(1));
    CHECK(static_cast<double>(to_long_double(huge)) == doctest::Approx(1.2345678901234568e29));
    const RationalPolynomial p{q(1), q(0), q(1)};
    CHECK(std::abs(p.evaluate({0.0L, 1.0L})) < 1e-18L);
}
