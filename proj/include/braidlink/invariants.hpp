#pragma once

#include "braidlink/braid.hpp"
#include "braidlink/integer_matrix.hpp"
#include "braidlink/laurent.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace braidlink {

/// The two determinant routes disagreed; always a convention bug.
class DeterminantMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Generator loop of the braid Seifert surface: the part of column
/// `column` (1-based generator index) between two consecutive occurrences of
/// that generator, given as letter indices into the word.
struct BasisLoop {
    int column = 0;
    std::size_t first = 0;
    std::size_t second = 0;

    friend bool operator==(const BasisLoop&, const BasisLoop&) = default;
};

struct SeifertData {
    IntegerMatrix matrix;
    std::vector<BasisLoop> basis_loops;
    /// Some generator column is unused, so the surface and the link split.
    bool split = false;
};

/// Square matrix over Z[t, 1/t].
class LaurentMatrix {
public:
    explicit LaurentMatrix(std::size_t n = 0) : n_(n), entries_(n * n) {}
    static LaurentMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    LaurentPolynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
    const LaurentPolynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

    LaurentPolynomial determinant() const;

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
    friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

private:
    std::size_t n_;
    std::vector<LaurentPolynomial> entries_;
};

struct AlexanderValue {
    long t = 0;
    mpz_class value;
};

struct InvariantReport {
    int strand_count = 0;
    StrandComponentMap components;
    long long exponent_sum = 0;
    LinkingMatrix linking;
    mpz_class determinant_seifert;
    mpz_class determinant_burau;
    LaurentPolynomial alexander;
    std::vector<AlexanderValue> alexander_at;

    /// The common nonnegative link determinant.
    const mpz_class& determinant() const { return determinant_burau; }
};

/// Seifert matrix of the canonical surface of the closed braid: one disk per
/// strand, one half-twisted band per letter. Loops are ordered by column,
/// then by occurrence.
SeifertData seifert_matrix(const BraidWord& w);

/// det(V + V^T), or 0 for a split closure.
mpz_class symmetrized_determinant(const SeifertData& s);

/// det(V - t V^T); zero for a split closure.
LaurentPolynomial seifert_alexander(const SeifertData& s);

/// Reduced Burau generator for a single letter of B_n (n >= 2):
/// sigma_i acts as the identity except in row i, which reads
/// t at column i-1, -t at column i, 1 at column i+1 (1-based, entries
/// outside the matrix dropped).
LaurentMatrix burau_generator(int n, BraidWord::Letter letter);

/// Product of the reduced Burau generators over the word; n >= 2.
LaurentMatrix burau_reduced(const BraidWord& w);

/// Normalizes by a unit +-t^k: lowest exponent 0, positive top coefficient.
LaurentPolynomial normalize_alexander(const LaurentPolynomial& p);

/// det(I - burau(w)) / (1 + t + ... + t^{n-1}), normalized.
LaurentPolynomial alexander_polynomial(const BraidWord& w);

/// |det(V + V^T)| checked against |Delta(-1)|; throws DeterminantMismatch if
/// they differ.
mpz_class link_determinant(const BraidWord& w);

/// All invariants of the closure. `evaluation_points` lists the integer t
/// values at which the normalized Alexander polynomial is reported.
InvariantReport full_report(const BraidWord& w, const std::vector<long>& evaluation_points = {-1});

}  // namespace braidlink
