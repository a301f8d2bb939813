#include "braidlink/invariants.hpp"

#include "braidlink/bareiss.hpp"

#include <cstdlib>

namespace braidlink {

namespace {

int sign_of(int letter) { return letter > 0 ? 1 : -1; }

LaurentPolynomial determinant_of(std::vector<LaurentPolynomial> entries, std::size_t n) {
    return bareiss_determinant(std::move(entries), n, [](const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return exact_divide(a, b);
    });
}

bool column_graph_disconnected(const BraidWord& w) {
    std::vector<bool> occupied(static_cast<std::size_t>(w.strand_count()), false);
    for (int e : w.letters()) occupied[static_cast<std::size_t>(std::abs(e))] = true;
    for (int i = 1; i < w.strand_count(); ++i) {
        if (!occupied[static_cast<std::size_t>(i)]) return true;
    }
    return false;
}

}  // namespace

// LaurentMatrix

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
    LaurentMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

LaurentPolynomial LaurentMatrix::determinant() const { return determinant_of(entries_, n_); }

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
    LaurentMatrix out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
        for (std::size_t k = 0; k < a.n_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < a.n_; ++j) {
                if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
    LaurentMatrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
    return out;
}

// Seifert path

SeifertData seifert_matrix(const BraidWord& w) {
    const auto& letters = w.letters();
    SeifertData data;
    data.split = column_graph_disconnected(w);

    for (int column = 1; column < w.strand_count(); ++column) {
        std::size_t previous = letters.size();
        for (std::size_t k = 0; k < letters.size(); ++k) {
            if (std::abs(letters[k]) != column) continue;
            if (previous != letters.size()) data.basis_loops.push_back({column, previous, k});
            previous = k;
        }
    }

    const std::size_t m = data.basis_loops.size();
    IntegerMatrix v(m, m);
    for (std::size_t a = 0; a < m; ++a) {
        const BasisLoop& la = data.basis_loops[a];
        const int s1 = sign_of(letters[la.first]);
        const int s2 = sign_of(letters[la.second]);
        // self-linking with the push-off: -1 for two positive bands, +1 for
        // two negative ones, 0 for mixed
        v(a, a) = -(s1 + s2) / 2;

        for (std::size_t b = 0; b < m; ++b) {
            if (a == b) continue;
            const BasisLoop& lb = data.basis_loops[b];
            if (lb.column == la.column && lb.first == la.second) {
                // consecutive loops in one column share the band la.second
                if (sign_of(letters[la.second]) > 0) {
                    v(a, b) = 1;
                } else {
                    v(b, a) = -1;
                }
            } else if (lb.column == la.column + 1) {
                // neighbouring columns link only when the loops interleave
                if (la.first < lb.first && lb.first < la.second && la.second < lb.second) {
                    v(a, b) = -1;
                } else if (lb.first < la.first && la.first < lb.second && lb.second < la.second) {
                    v(a, b) = 1;
                }
            }
        }
    }
    data.matrix = std::move(v);
    return data;
}

mpz_class symmetrized_determinant(const SeifertData& s) {
    if (s.split) return 0;
    return (s.matrix + s.matrix.transposed()).determinant();
}

LaurentPolynomial seifert_alexander(const SeifertData& s) {
    if (s.split) return {};
    const std::size_t m = s.matrix.rows();
    std::vector<LaurentPolynomial> entries(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            entries[i * m + j] = LaurentPolynomial(s.matrix(i, j)) - LaurentPolynomial::monomial(s.matrix(j, i), 1);
        }
    }
    return determinant_of(std::move(entries), m);
}

// Burau path

LaurentMatrix burau_generator(int n, BraidWord::Letter letter) {
    if (n < 2) throw std::invalid_argument("reduced Burau representation needs at least 2 strands");
    const int i = std::abs(letter);
    if (letter == 0 || i > n - 1) throw std::invalid_argument("letter out of range");
    const auto size = static_cast<std::size_t>(n - 1);
    const auto row = static_cast<std::size_t>(i - 1);
    LaurentMatrix g = LaurentMatrix::identity(size);
    if (letter > 0) {
        if (row > 0) g(row, row - 1) = LaurentPolynomial::t();
        g(row, row) = LaurentPolynomial::monomial(-1, 1);
        if (row + 1 < size) g(row, row + 1) = 1;
    } else {
        if (row > 0) g(row, row - 1) = 1;
        g(row, row) = LaurentPolynomial::monomial(-1, -1);
        if (row + 1 < size) g(row, row + 1) = LaurentPolynomial::monomial(1, -1);
    }
    return g;
}

LaurentMatrix burau_reduced(const BraidWord& w) {
    const int n = w.strand_count();
    if (n < 2) throw std::invalid_argument("reduced Burau representation needs at least 2 strands");
    LaurentMatrix m = LaurentMatrix::identity(static_cast<std::size_t>(n - 1));
    for (int e : w.letters()) m = m * burau_generator(n, e);
    return m;
}

LaurentPolynomial normalize_alexander(const LaurentPolynomial& p) {
    if (p.is_zero()) return p;
    LaurentPolynomial q = p.shifted(-p.min_exponent());
    if (q.leading_coefficient() < 0) q = -q;
    return q;
}

LaurentPolynomial alexander_polynomial(const BraidWord& w) {
    const int n = w.strand_count();
    if (n == 1) return 1;
    const auto size = static_cast<std::size_t>(n - 1);
    LaurentPolynomial raw = (LaurentMatrix::identity(size) - burau_reduced(w)).determinant();
    std::map<int, mpz_class> geometric;
    for (int k = 0; k < n; ++k) geometric[k] = 1;
    return normalize_alexander(exact_divide(raw, LaurentPolynomial::from_coefficients(geometric)));
}

mpz_class link_determinant(const BraidWord& w) {
    mpz_class via_seifert = abs(symmetrized_determinant(seifert_matrix(w)));
    mpq_class at_minus_one = alexander_polynomial(w).evaluate(-1);
    mpz_class via_burau = abs(at_minus_one.get_num());
    if (via_seifert != via_burau) {
        throw DeterminantMismatch("link determinant mismatch on " + w.to_string() + ": Seifert " +
                                  via_seifert.get_str() + " vs Burau " + via_burau.get_str());
    }
    return via_burau;
}

InvariantReport full_report(const BraidWord& w, const std::vector<long>& evaluation_points) {
    InvariantReport report;
    report.strand_count = w.strand_count();
    report.components = components(w);
    report.exponent_sum = exponent_sum(w);
    report.linking = linking_matrix(w);
    report.determinant_seifert = abs(symmetrized_determinant(seifert_matrix(w)));
    report.alexander = alexander_polynomial(w);
    report.determinant_burau = abs(report.alexander.evaluate(-1).get_num());
    if (report.determinant_seifert != report.determinant_burau) {
        throw DeterminantMismatch("link determinant mismatch on " + w.to_string() + ": Seifert " +
                                  report.determinant_seifert.get_str() + " vs Burau " +
                                  report.determinant_burau.get_str());
    }
    for (long t : evaluation_points) {
        // normalized polynomial has no negative powers, so the value is integral
        report.alexander_at.push_back({t, report.alexander.evaluate(mpq_class(t)).get_num()});
    }
    return report;
}

}  // namespace braidlink
