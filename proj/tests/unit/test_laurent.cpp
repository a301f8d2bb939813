#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidlink/laurent.hpp"

using namespace braidlink;

namespace {

LaurentPolynomial poly(std::map<int, mpz_class> terms) { return LaurentPolynomial::from_coefficients(terms); }

}  // namespace

TEST_CASE("zero coefficients are dropped") {
    const auto p = poly({{0, 1}, {1, 0}, {2, -1}});
    CHECK(p.terms().size() == 2);
    CHECK((p - p).is_zero());
    CHECK(LaurentPolynomial(0).is_zero());
}

TEST_CASE("exponent bounds and coefficients") {
    const auto p = poly({{-2, 3}, {4, -5}});
    CHECK(p.min_exponent() == -2);
    CHECK(p.max_exponent() == 4);
    CHECK(p.leading_coefficient() == -5);
    CHECK(p.coefficient(1) == 0);
    CHECK(p.coefficient(-2) == 3);
}

TEST_CASE("arithmetic") {
    const auto t = LaurentPolynomial::t();
    const auto one = LaurentPolynomial(1);
    CHECK((one - t) * (one + t) == one - t * t);
    CHECK(t * LaurentPolynomial::monomial(1, -1) == one);
    CHECK(-(one - t) == t - one);
}

TEST_CASE("shift and reflection") {
    const auto p = poly({{0, 1}, {1, -3}, {3, 2}});
    CHECK(p.shifted(2) == poly({{2, 1}, {3, -3}, {5, 2}}));
    CHECK(p.reflected() == poly({{0, 1}, {-1, -3}, {-3, 2}}));
}

TEST_CASE("evaluation is exact") {
    const auto p = poly({{-1, 1}, {0, -1}, {1, 1}});
    CHECK(p.evaluate(mpq_class(-1)) == -3);
    CHECK(p.evaluate(mpq_class(2)) == mpq_class(3, 2));
}

TEST_CASE("exact division") {
    const auto t = LaurentPolynomial::t();
    const auto one = LaurentPolynomial(1);
    const auto divisor = one + t + t * t;
    const auto quotient = poly({{-1, 2}, {0, -1}, {2, 7}});
    CHECK(exact_divide(quotient * divisor, divisor) == quotient);
    CHECK(exact_divide(LaurentPolynomial(0), divisor).is_zero());
    CHECK_THROWS_AS(exact_divide(one + t, one + t * t), InexactDivision);
    CHECK_THROWS_AS(exact_divide(LaurentPolynomial(3), LaurentPolynomial(2)), InexactDivision);
    CHECK_THROWS_AS(exact_divide(one, LaurentPolynomial(0)), std::domain_error);
}

TEST_CASE("text form") {
    CHECK(poly({{0, 1}, {1, -1}, {2, 1}}).to_string() == "1 - t + t^2");
    CHECK(poly({{-1, -2}, {1, 3}}).to_string() == "-2*t^-1 + 3*t");
    CHECK(LaurentPolynomial(0).to_string() == "0");
}

TEST_CASE("coefficients beyond 64 bits") {
    const mpz_class big("123456789012345678901234567890");
    const auto p = LaurentPolynomial::monomial(big, 3);
    CHECK((p * p).coefficient(6) == big * big);
}
