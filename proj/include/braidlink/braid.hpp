#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidlink {

/// Raised for malformed braid text.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A permutation of the strand positions {0..n-1}.
///
/// images()[s] is the final position of the strand that starts at position s.
/// Printing uses 1-based cycle notation.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator[](int s) const { return images_[static_cast<std::size_t>(s)]; }
    const std::vector<int>& images() const { return images_; }

    /// Apply *this first, then `next`.
    Permutation then(const Permutation& next) const;

    /// Cycles in order of their least element, each starting at that element.
    std::vector<std::vector<int>> cycles() const;
    std::string to_cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Strand-to-component assignment of a braid closure.
struct StrandComponentMap {
    std::vector<int> component_of_strand;
    int component_count = 0;

    /// Strand positions (0-based) belonging to component `c`, ascending.
    std::vector<int> strands_of(int c) const;
};

/// Pairwise linking numbers between closure components; diagonal is zero.
struct LinkingMatrix {
    int size = 0;
    std::vector<long long> entries;

    long long at(int p, int q) const { return entries[static_cast<std::size_t>(p * size + q)]; }
};

/// A word in the Artin generators of B_n.
///
/// A letter e > 0 stands for sigma_e, e < 0 for sigma_{|e|}^-1, and every
/// letter satisfies 1 <= |e| <= n-1.
class BraidWord {
public:
    using Letter = int;

    explicit BraidWord(int strand_count, std::vector<Letter> letters = {});

    int strand_count() const { return strand_count_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    /// Canonical text: "B<n>" then the signed letters, single spaces.
    std::string to_string() const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strand_count_;
    std::vector<Letter> letters_;
};

/// Parses the braid text format.
///
/// Tokens are separated by whitespace or commas. Accepted forms: signed
/// integers ("3", "-2"), generator names ("s3", "s2^-1"), the macro "D45"
/// (the three letters 4 5 4) and a header "B<n>" fixing the strand count.
/// Without a header the strand count is 1 + max |letter|.
BraidWord parse_braid(std::string_view text);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& w);
BraidWord free_reduce(const BraidWord& w);

/// The automorphism sigma_i -> sigma_{n-i}.
BraidWord tau(const BraidWord& w);

Permutation closure_permutation(const BraidWord& w);

/// Components are the cycles of the closure permutation, numbered in order
/// of their least strand.
StrandComponentMap components(const BraidWord& w);

long long exponent_sum(const BraidWord& w);

/// Half the signed count of crossings between distinct components, strands
/// tracked positionally through the word.
LinkingMatrix linking_matrix(const BraidWord& w);

/// g w g^-1
BraidWord conjugate(const BraidWord& w, const BraidWord& g);

/// Markov stabilization: adds a strand and appends sign * old_n.
BraidWord stabilize(const BraidWord& w, int sign);

}  // namespace braidlink
