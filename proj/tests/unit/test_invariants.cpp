#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidlink/invariants.hpp"

using namespace braidlink;

namespace {

LaurentPolynomial poly(std::map<int, mpz_class> terms) { return LaurentPolynomial::from_coefficients(terms); }

}  // namespace

TEST_CASE("Seifert matrix of the trefoil") {
    const SeifertData s = seifert_matrix(parse_braid("B2 1 1 1"));
    CHECK_FALSE(s.split);
    CHECK(s.matrix == IntegerMatrix{{-1, 1}, {0, -1}});
    REQUIRE(s.basis_loops.size() == 2);
    CHECK(s.basis_loops[0] == BasisLoop{1, 0, 1});
    CHECK(s.basis_loops[1] == BasisLoop{1, 1, 2});
    CHECK(symmetrized_determinant(s) == 3);
    CHECK(normalize_alexander(seifert_alexander(s)) == poly({{0, 1}, {1, -1}, {2, 1}}));
}

TEST_CASE("Seifert matrix of the figure-eight") {
    const SeifertData s = seifert_matrix(parse_braid("B3 1 -2 1 -2"));
    CHECK(s.matrix.rows() == 2);
    CHECK(symmetrized_determinant(s) == -5);
}

TEST_CASE("an unoccupied column means a split diagram") {
    const SeifertData s = seifert_matrix(parse_braid("B3 1 1 1"));
    CHECK(s.split);
    CHECK(symmetrized_determinant(s) == 0);
}

TEST_CASE("reduced Burau generators") {
    const auto t = LaurentPolynomial::t();
    const LaurentMatrix g = burau_generator(3, 1);
    CHECK(g(0, 0) == -t);
    CHECK(g(0, 1) == LaurentPolynomial(1));
    CHECK(g(1, 0) == LaurentPolynomial(0));
    CHECK(g(1, 1) == LaurentPolynomial(1));
    const LaurentMatrix h = burau_generator(3, -2);
    CHECK(h(1, 0) == LaurentPolynomial(1));
    CHECK(h(1, 1) == -LaurentPolynomial::monomial(1, -1));
    CHECK(g * burau_generator(3, -1) == LaurentMatrix::identity(2));
    CHECK_THROWS_AS(burau_generator(3, 3), std::invalid_argument);
}

TEST_CASE("Alexander polynomials of calibration knots and links") {
    CHECK(alexander_polynomial(parse_braid("B2 1 1 1")) == poly({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(alexander_polynomial(parse_braid("B3 1 -2 1 -2")) == poly({{0, 1}, {1, -3}, {2, 1}}));
    CHECK(alexander_polynomial(parse_braid("B2 1 1 1 1 1")) == poly({{0, 1}, {1, -1}, {2, 1}, {3, -1}, {4, 1}}));
    CHECK(alexander_polynomial(parse_braid("B2 1 1")) == poly({{0, -1}, {1, 1}}));
    CHECK(alexander_polynomial(parse_braid("B1")) == LaurentPolynomial(1));
    CHECK(alexander_polynomial(parse_braid("B2")).is_zero());
}

TEST_CASE("normalization fixes the unit") {
    const auto p = poly({{-3, -1}, {-2, 1}, {-1, -1}});
    CHECK(normalize_alexander(p) == poly({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(normalize_alexander(LaurentPolynomial(0)).is_zero());
}

TEST_CASE("link determinants of calibration fixtures") {
    CHECK(link_determinant(parse_braid("B2 1 1 1")) == 3);
    CHECK(link_determinant(parse_braid("B3 1 -2 1 -2")) == 5);
    CHECK(link_determinant(parse_braid("B2 1 1")) == 2);
    CHECK(link_determinant(parse_braid("B1")) == 1);
    CHECK(link_determinant(parse_braid("B2")) == 0);
    CHECK(link_determinant(parse_braid("B2 1 1 1 1 1 1 1 1 1")) == 9);
    CHECK(link_determinant(parse_braid("B3 1 2")) == 1);
}

TEST_CASE("full report fields") {
    const InvariantReport r = full_report(parse_braid("B2 1 1"), {-1, 2});
    CHECK(r.strand_count == 2);
    CHECK(r.components.component_count == 2);
    CHECK(r.exponent_sum == 2);
    CHECK(r.linking.at(0, 1) == 1);
    CHECK(r.determinant_seifert == 2);
    CHECK(r.determinant_burau == 2);
    REQUIRE(r.alexander_at.size() == 2);
    CHECK(r.alexander_at[0].value == -2);
    CHECK(r.alexander_at[1].t == 2);
    CHECK(r.alexander_at[1].value == 1);
}
