#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace braidlink {

/*
 * Fraction-free (Bareiss) determinant over an integral domain.
 *
 * Every intermediate entry is a minor of the input, so the division by the
 * previous pivot is exact; `exact_divide` must either return the exact
 * quotient or throw. Row swaps on a zero pivot flip the sign.
 *
 * Works for any Ring with +, -, *, == and a zero default value; used for
 * mpz_class matrices and for Laurent-polynomial matrices.
 */
template <typename Ring, typename ExactDivide>
Ring bareiss_determinant(std::vector<Ring> m, std::size_t n, ExactDivide exact_divide) {
    if (m.size() != n * n) throw std::invalid_argument("bareiss_determinant: storage does not match n*n");
    if (n == 0) return Ring(1);
    auto at = [&m, n](std::size_t r, std::size_t c) -> Ring& { return m[r * n + c]; };

    const Ring zero{};
    Ring previous(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == zero) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && at(swap_row, k) == zero) ++swap_row;
            if (swap_row == n) return zero;
            for (std::size_t c = k; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
            negate = !negate;
        }
        const Ring pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                at(i, j) = exact_divide(at(i, j) * pivot - at(i, k) * at(k, j), previous);
            }
            at(i, k) = zero;
        }
        previous = pivot;
    }
    Ring det = at(n - 1, n - 1);
    if (negate) det = zero - det;
    return det;
}

}  // namespace braidlink
