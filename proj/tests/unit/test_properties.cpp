#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidlink/invariants.hpp"
#include "random_braids.hpp"

#include <algorithm>

using namespace braidlink;
using braidlink::testing::random_word;
using braidlink::testing::random_word_up_to;

namespace {

BraidWord mirror(const BraidWord& w) {
    std::vector<int> letters;
    for (int e : w.letters()) letters.push_back(-e);
    return BraidWord(w.strand_count(), std::move(letters));
}

// Adds a strand on the left: s_i -> s_{i+1}, then appends s_1^sign.
BraidWord stabilize_left(const BraidWord& w, int sign) {
    std::vector<int> letters;
    for (int e : w.letters()) letters.push_back(e > 0 ? e + 1 : e - 1);
    letters.push_back(sign);
    return BraidWord(w.strand_count() + 1, std::move(letters));
}

}  // namespace

TEST_CASE("parse and print round-trip") {
    std::mt19937 rng(1);
    for (int k = 0; k < 200; ++k) {
        const BraidWord w = random_word_up_to(rng, 9, 30);
        CHECK(parse_braid(w.to_string()) == w);
    }
}

TEST_CASE("tau is an involution and preserves exponent sum") {
    std::mt19937 rng(2);
    for (int k = 0; k < 200; ++k) {
        const BraidWord w = random_word_up_to(rng, 9, 30);
        CHECK(tau(tau(w)) == w);
        CHECK(exponent_sum(tau(w)) == exponent_sum(w));
    }
}

TEST_CASE("w w^-1 reduces to the empty word") {
    std::mt19937 rng(3);
    for (int k = 0; k < 200; ++k) {
        const BraidWord w = random_word_up_to(rng, 8, 25);
        CHECK(free_reduce(concat(w, invert(w))).empty());
        CHECK(free_reduce(free_reduce(w)) == free_reduce(w));
    }
}

TEST_CASE("closure permutation is a homomorphism") {
    std::mt19937 rng(4);
    for (int k = 0; k < 200; ++k) {
        const BraidWord a = random_word(rng, 6, 12);
        const BraidWord b = random_word(rng, 6, 12);
        CHECK(closure_permutation(concat(a, b)) == closure_permutation(a).then(closure_permutation(b)));
    }
}

TEST_CASE("linking matrix is symmetric with zero diagonal") {
    std::mt19937 rng(5);
    for (int k = 0; k < 200; ++k) {
        const BraidWord w = random_word_up_to(rng, 7, 24);
        const auto lk = linking_matrix(w);
        for (int p = 0; p < lk.size; ++p) {
            CHECK(lk.at(p, p) == 0);
            for (int q = 0; q < lk.size; ++q) CHECK(lk.at(p, q) == lk.at(q, p));
        }
    }
}

TEST_CASE("linking numbers survive conjugation as a multiset") {
    std::mt19937 rng(6);
    for (int k = 0; k < 150; ++k) {
        const BraidWord w = random_word(rng, 5, 16);
        const BraidWord g = random_word(rng, 5, 6);
        auto off_diagonal = [](const LinkingMatrix& lk) {
            std::vector<long long> values;
            for (int p = 0; p < lk.size; ++p) {
                for (int q = p + 1; q < lk.size; ++q) values.push_back(lk.at(p, q));
            }
            std::sort(values.begin(), values.end());
            return values;
        };
        const auto before = linking_matrix(w);
        const auto after = linking_matrix(conjugate(w, g));
        CHECK(before.size == after.size);
        CHECK(off_diagonal(before) == off_diagonal(after));
    }
}

TEST_CASE("Burau respects the braid relations") {
    for (int n = 3; n <= 6; ++n) {
        for (int i = 1; i + 1 < n; ++i) {
            CHECK(burau_reduced(BraidWord(n, {i, i + 1, i})) == burau_reduced(BraidWord(n, {i + 1, i, i + 1})));
        }
        for (int i = 1; i < n; ++i) {
            for (int j = i + 2; j < n; ++j) {
                CHECK(burau_reduced(BraidWord(n, {i, j})) == burau_reduced(BraidWord(n, {j, i})));
            }
        }
    }
    std::mt19937 rng(7);
    for (int k = 0; k < 50; ++k) {
        const BraidWord w = random_word(rng, 5, 10);
        CHECK(burau_reduced(concat(w, invert(w))) == LaurentMatrix::identity(4));
    }
}

TEST_CASE("Alexander polynomial is symmetric up to a unit") {
    std::mt19937 rng(8);
    for (int k = 0; k < 150; ++k) {
        const BraidWord w = random_word_up_to(rng, 5, 16);
        const LaurentPolynomial a = alexander_polynomial(w);
        if (a.is_zero()) continue;
        const LaurentPolynomial r = normalize_alexander(a.reflected());
        CHECK(r == a);
    }
}

TEST_CASE("Seifert and Burau Alexander polynomials agree up to a unit") {
    std::mt19937 rng(9);
    for (int k = 0; k < 150; ++k) {
        const BraidWord w = random_word_up_to(rng, 5, 14);
        const SeifertData s = seifert_matrix(w);
        if (s.split) continue;
        CHECK(normalize_alexander(seifert_alexander(s)) == alexander_polynomial(w));
    }
}

TEST_CASE("mirror image keeps the determinant") {
    std::mt19937 rng(10);
    for (int k = 0; k < 150; ++k) {
        const BraidWord w = random_word_up_to(rng, 6, 18);
        CHECK(link_determinant(mirror(w)) == link_determinant(w));
    }
}

TEST_CASE("Markov moves keep the Alexander polynomial") {
    std::mt19937 rng(11);
    for (int k = 0; k < 100; ++k) {
        const BraidWord w = random_word_up_to(rng, 5, 14);
        const BraidWord g = random_word(rng, w.strand_count(), 5);
        const LaurentPolynomial a = alexander_polynomial(w);
        CHECK(alexander_polynomial(conjugate(w, g)) == a);
        for (int sign : {1, -1}) {
            CHECK(alexander_polynomial(stabilize(w, sign)) == a);
            CHECK(alexander_polynomial(stabilize_left(w, sign)) == a);
        }
    }
}

TEST_CASE("components and exponent sum under conjugation") {
    std::mt19937 rng(12);
    for (int k = 0; k < 150; ++k) {
        const BraidWord w = random_word_up_to(rng, 7, 20);
        const BraidWord g = random_word(rng, w.strand_count(), 6);
        const BraidWord c = conjugate(w, g);
        CHECK(components(c).component_count == components(w).component_count);
        CHECK(exponent_sum(c) == exponent_sum(w));
    }
}
