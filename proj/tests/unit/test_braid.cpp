#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidlink/braid.hpp"

using namespace braidlink;

TEST_CASE("parse accepts integers, generator names and powers") {
    const BraidWord w = parse_braid("B4 1 -2 s3 s2^-1 s1^1");
    CHECK(w.strand_count() == 4);
    CHECK(w.letters() == std::vector<int>{1, -2, 3, -2, 1});
}

TEST_CASE("parse splits on commas and whitespace") {
    CHECK(parse_braid("1,2,\t-1\n2").letters() == std::vector<int>{1, 2, -1, 2});
}

TEST_CASE("parse expands D45 into s4 s5 s4") {
    CHECK(parse_braid("B9 D45").letters() == std::vector<int>{4, 5, 4});
}

TEST_CASE("parse infers strand count from the largest index") {
    CHECK(parse_braid("1 -3 2").strand_count() == 4);
    CHECK(parse_braid("s1 s1 s1").strand_count() == 2);
}

TEST_CASE("header allows an empty word") {
    const BraidWord w = parse_braid("B3");
    CHECK(w.strand_count() == 3);
    CHECK(w.empty());
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse_braid(""), ParseError);
    CHECK_THROWS_AS(parse_braid("B3 4"), ParseError);
    CHECK_THROWS_AS(parse_braid("B3 -3"), ParseError);
    CHECK_THROWS_AS(parse_braid("1 B3"), ParseError);
    CHECK_THROWS_AS(parse_braid("B0"), ParseError);
    CHECK_THROWS_AS(parse_braid("Bx 1"), ParseError);
    CHECK_THROWS_AS(parse_braid("0"), ParseError);
    CHECK_THROWS_AS(parse_braid("s0"), ParseError);
    CHECK_THROWS_AS(parse_braid("s2^2"), ParseError);
    CHECK_THROWS_AS(parse_braid("x1"), ParseError);
    CHECK_THROWS_AS(parse_braid("1.5"), ParseError);
}

TEST_CASE("to_string round-trips") {
    const BraidWord w(5, {1, -4, 3, 3, -2});
    CHECK(w.to_string() == "B5 1 -4 3 3 -2");
    CHECK(parse_braid(w.to_string()) == w);
}

TEST_CASE("constructor validates letters") {
    CHECK_THROWS_AS(BraidWord(3, {3}), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord(3, {0}), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord(0), std::invalid_argument);
}

TEST_CASE("invert reverses and negates") {
    CHECK(invert(BraidWord(4, {1, -2, 3})).letters() == std::vector<int>{-3, 2, -1});
}

TEST_CASE("free_reduce cancels adjacent inverse pairs") {
    CHECK(free_reduce(BraidWord(4, {1, 2, -2, -1, 3})).letters() == std::vector<int>{3});
    CHECK(free_reduce(BraidWord(3, {1, 2, 1})).letters() == std::vector<int>{1, 2, 1});
}

TEST_CASE("concat requires matching strand counts") {
    CHECK(concat(BraidWord(3, {1}), BraidWord(3, {-2})).letters() == std::vector<int>{1, -2});
    CHECK_THROWS_AS(concat(BraidWord(3, {1}), BraidWord(4, {1})), std::invalid_argument);
}

TEST_CASE("tau maps s_i to s_{n-i} and keeps signs") {
    CHECK(tau(BraidWord(9, {1, -2, 4, 5, 8})).letters() == std::vector<int>{8, -7, 5, 4, 1});
}

TEST_CASE("closure permutation of a single crossing is a transposition") {
    const Permutation p = closure_permutation(BraidWord(3, {1}));
    CHECK(p.images() == std::vector<int>{1, 0, 2});
    CHECK(p.to_cycle_string() == "(1 2)(3)");
}

TEST_CASE("closure permutation composes left to right") {
    // strand starting at 0 goes to 1 under s1 then to 2 under s2
    const Permutation p = closure_permutation(BraidWord(3, {1, 2}));
    CHECK(p.images() == std::vector<int>{2, 0, 1});
    CHECK(closure_permutation(BraidWord(3, {1})).then(closure_permutation(BraidWord(3, {2}))) == p);
}

TEST_CASE("components of small closures") {
    CHECK(components(BraidWord(2, {1, 1, 1})).component_count == 1);
    CHECK(components(BraidWord(2, {1, 1})).component_count == 2);
    CHECK(components(BraidWord(3)).component_count == 3);
    const auto map = components(BraidWord(4, {1, 1, 3}));
    CHECK(map.component_count == 3);
    CHECK(map.strands_of(map.component_of_strand[2]) == std::vector<int>{2, 3});
}

TEST_CASE("exponent sum") {
    CHECK(exponent_sum(BraidWord(4, {1, -2, 3, 3})) == 2);
}

TEST_CASE("linking matrix of the Hopf link") {
    const auto lk = linking_matrix(BraidWord(2, {1, 1}));
    CHECK(lk.size == 2);
    CHECK(lk.at(0, 1) == 1);
    CHECK(lk.at(1, 0) == 1);
    CHECK(lk.at(0, 0) == 0);
    CHECK(linking_matrix(BraidWord(2, {-1, -1})).at(0, 1) == -1);
}

TEST_CASE("linking matrix ignores self crossings") {
    // three components; s1^2 links the first pair, s2^2 the second
    const auto lk = linking_matrix(BraidWord(3, {1, 1, 2, 2}));
    CHECK(lk.size == 3);
    long long off = 0;
    for (int p = 0; p < 3; ++p) {
        for (int q = p + 1; q < 3; ++q) off += lk.at(p, q);
    }
    CHECK(off == 2);
}

TEST_CASE("conjugate and stabilize") {
    const BraidWord w(3, {1, 2});
    CHECK(conjugate(w, BraidWord(3, {2})).letters() == std::vector<int>{2, 1, 2, -2});
    const BraidWord up = stabilize(w, -1);
    CHECK(up.strand_count() == 4);
    CHECK(up.letters() == std::vector<int>{1, 2, -3});
    CHECK_THROWS_AS(stabilize(w, 0), std::invalid_argument);
}
