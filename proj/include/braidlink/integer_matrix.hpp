#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace braidlink {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    mpz_class& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    IntegerMatrix transposed() const;

    /// Exact determinant by fraction-free elimination; 1 for the 0x0 matrix.
    mpz_class determinant() const;

    /// One row per line, "[a, b, c]".
    std::string to_string() const;

    friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
    friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> entries_;
};

}  // namespace braidlink
