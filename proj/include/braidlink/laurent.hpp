#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace braidlink {

/// Raised when a polynomial division leaves a remainder.
class InexactDivision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Integer Laurent polynomial in one variable t.
///
/// Stored sparsely as exponent -> coefficient with no zero coefficients, so
/// the zero polynomial is the empty map.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(long constant);  // NOLINT(google-explicit-constructor)
    explicit LaurentPolynomial(const mpz_class& constant);

    static LaurentPolynomial monomial(const mpz_class& coefficient, int exponent);
    static LaurentPolynomial t() { return monomial(1, 1); }
    static LaurentPolynomial from_coefficients(const std::map<int, mpz_class>& terms);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, mpz_class>& terms() const { return terms_; }
    mpz_class coefficient(int exponent) const;

    /// Only valid for nonzero polynomials.
    int min_exponent() const;
    int max_exponent() const;
    const mpz_class& leading_coefficient() const;

    LaurentPolynomial shifted(int k) const;
    /// t -> 1/t
    LaurentPolynomial reflected() const;

    mpq_class evaluate(const mpq_class& t) const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator-(const LaurentPolynomial& a);
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

    /// "1 - t + t^2", "0" for the zero polynomial.
    std::string to_string() const;

private:
    void add_term(int exponent, const mpz_class& coefficient);

    std::map<int, mpz_class> terms_;
};

/// Exact quotient a / b; throws InexactDivision on a nonzero remainder and
/// std::domain_error when b is zero.
LaurentPolynomial exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace braidlink
