#include "braidlink/laurent.hpp"

#include <sstream>

namespace braidlink {

LaurentPolynomial::LaurentPolynomial(long constant) {
    if (constant != 0) terms_.emplace(0, mpz_class(constant));
}

LaurentPolynomial::LaurentPolynomial(const mpz_class& constant) {
    if (constant != 0) terms_.emplace(0, constant);
}

LaurentPolynomial LaurentPolynomial::monomial(const mpz_class& coefficient, int exponent) {
    LaurentPolynomial p;
    p.add_term(exponent, coefficient);
    return p;
}

LaurentPolynomial LaurentPolynomial::from_coefficients(const std::map<int, mpz_class>& terms) {
    LaurentPolynomial p;
    for (const auto& [k, c] : terms) p.add_term(k, c);
    return p;
}

mpz_class LaurentPolynomial::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPolynomial::min_exponent() const {
    if (is_zero()) throw std::domain_error("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
    if (is_zero()) throw std::domain_error("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

const mpz_class& LaurentPolynomial::leading_coefficient() const {
    if (is_zero()) throw std::domain_error("leading_coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
    LaurentPolynomial p;
    for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::reflected() const {
    LaurentPolynomial p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
    return p;
}

mpq_class LaurentPolynomial::evaluate(const mpq_class& t) const {
    if (is_zero()) return 0;
    if (t == 0 && min_exponent() < 0) throw std::domain_error("negative power of t at t = 0");
    mpq_class sum = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class power = 1;
        mpq_class base = e >= 0 ? t : mpq_class(1) / t;
        for (int k = 0; k < (e >= 0 ? e : -e); ++k) power *= base;
        sum += power * c;
    }
    return sum;
}

void LaurentPolynomial::add_term(int exponent, const mpz_class& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial p;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
    }
    return p;
}

LaurentPolynomial operator-(const LaurentPolynomial& a) {
    LaurentPolynomial p = a;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

std::string LaurentPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "t";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

LaurentPolynomial exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    LaurentPolynomial quotient;
    LaurentPolynomial rest = a;
    const int b_top = b.max_exponent();
    const int b_span = b_top - b.min_exponent();
    const mpz_class& b_lead = b.leading_coefficient();
    // each step cancels the top term of `rest` and adds nothing above it, so
    // the span shrinks until either rest vanishes or it is shorter than b
    while (!rest.is_zero()) {
        if (rest.max_exponent() - rest.min_exponent() < b_span) {
            throw InexactDivision("polynomial division is not exact");
        }
        mpz_class q;
        mpz_class r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.leading_coefficient().get_mpz_t(), b_lead.get_mpz_t());
        if (r != 0) throw InexactDivision("polynomial division is not exact");
        auto term = LaurentPolynomial::monomial(q, rest.max_exponent() - b_top);
        quotient += term;
        rest -= term * b;
    }
    return quotient;
}

}  // namespace braidlink
