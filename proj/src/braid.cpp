#include "braidlink/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>

namespace braidlink {

namespace {

void check_letters(int n, const std::vector<int>& letters) {
    for (int e : letters) {
        if (e == 0 || std::abs(e) > n - 1) {
            throw std::invalid_argument("letter " + std::to_string(e) + " out of range for B" +
                                        std::to_string(n));
        }
    }
}

void require_same_strands(const BraidWord& a, const BraidWord& b, const char* what) {
    if (a.strand_count() != b.strand_count()) {
        throw std::invalid_argument(std::string(what) + ": strand count mismatch (B" +
                                    std::to_string(a.strand_count()) + " vs B" +
                                    std::to_string(b.strand_count()) + ")");
    }
}

std::optional<int> parse_int(std::string_view s) {
    if (s.empty()) return std::nullopt;
    // from_chars rejects a leading '+', accept it for symmetry with '-'
    if (s.front() == '+') s.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

std::vector<std::string_view> tokenize(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    auto is_sep = [](char c) {
        return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
    };
    while (i < text.size()) {
        while (i < text.size() && is_sep(text[i])) ++i;
        std::size_t j = i;
        while (j < text.size() && !is_sep(text[j])) ++j;
        if (j > i) tokens.push_back(text.substr(i, j - i));
        i = j;
    }
    return tokens;
}

// Appends the letters denoted by one token; false if the token is malformed.
bool expand_token(std::string_view tok, std::vector<int>& out) {
    if (tok == "D45") {
        out.insert(out.end(), {4, 5, 4});
        return true;
    }
    if (tok.front() == 's') {
        std::string_view body = tok.substr(1);
        int sign = 1;
        if (auto caret = body.find('^'); caret != std::string_view::npos) {
            std::string_view power = body.substr(caret + 1);
            if (power == "-1") {
                sign = -1;
            } else if (power != "1") {
                return false;
            }
            body = body.substr(0, caret);
        }
        if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            return false;
        }
        auto index = parse_int(body);
        if (!index || *index == 0) return false;
        out.push_back(sign * *index);
        return true;
    }
    auto value = parse_int(tok);
    if (!value || *value == 0) return false;
    out.push_back(*value);
    return true;
}

}  // namespace

// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("not a permutation");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& next) const {
    if (next.size() != size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> out(images_.size());
    for (std::size_t s = 0; s < images_.size(); ++s) out[s] = next[images_[s]];
    return Permutation(std::move(out));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> result;
    std::vector<bool> seen(images_.size(), false);
    for (int s = 0; s < size(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> cycle;
        for (int x = s; !seen[static_cast<std::size_t>(x)]; x = (*this)[x]) {
            seen[static_cast<std::size_t>(x)] = true;
            cycle.push_back(x);
        }
        result.push_back(std::move(cycle));
    }
    return result;
}

std::string Permutation::to_cycle_string() const {
    std::ostringstream os;
    for (const auto& cycle : cycles()) {
        os << '(';
        for (std::size_t k = 0; k < cycle.size(); ++k) os << (k ? " " : "") << cycle[k] + 1;
        os << ')';
    }
    return os.str();
}

std::vector<int> StrandComponentMap::strands_of(int c) const {
    std::vector<int> out;
    for (std::size_t s = 0; s < component_of_strand.size(); ++s) {
        if (component_of_strand[s] == c) out.push_back(static_cast<int>(s));
    }
    return out;
}

// BraidWord

BraidWord::BraidWord(int strand_count, std::vector<Letter> letters)
    : strand_count_(strand_count), letters_(std::move(letters)) {
    if (strand_count_ < 1) throw std::invalid_argument("strand count must be positive");
    check_letters(strand_count_, letters_);
}

std::string BraidWord::to_string() const {
    std::string out = "B" + std::to_string(strand_count_);
    for (int e : letters_) out += " " + std::to_string(e);
    return out;
}

BraidWord parse_braid(std::string_view text) {
    auto tokens = tokenize(text);
    std::optional<int> declared;
    std::vector<int> letters;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        std::string_view tok = tokens[k];
        if (tok.front() == 'B') {
            auto n = parse_int(tok.substr(1));
            if (k != 0 || !n || *n < 1 || tok.size() < 2 || tok[1] == '-' || tok[1] == '+') {
                throw ParseError("malformed strand-count header '" + std::string(tok) + "'");
            }
            declared = *n;
            continue;
        }
        if (!expand_token(tok, letters)) {
            throw ParseError("malformed token '" + std::string(tok) + "'");
        }
    }
    int n = 0;
    if (declared) {
        n = *declared;
        for (int e : letters) {
            if (std::abs(e) > n - 1) {
                throw ParseError("letter " + std::to_string(e) + " out of range for B" + std::to_string(n));
            }
        }
    } else {
        if (letters.empty()) throw ParseError("empty braid without B<n> header: strand count undeterminable");
        int max_index = 0;
        for (int e : letters) max_index = std::max(max_index, std::abs(e));
        n = max_index + 1;
    }
    return BraidWord(n, std::move(letters));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    require_same_strands(a, b, "concat");
    std::vector<int> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return BraidWord(a.strand_count(), std::move(letters));
}

BraidWord invert(const BraidWord& w) {
    std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
    for (int& e : letters) e = -e;
    return BraidWord(w.strand_count(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& w) {
    // single stack pass reaches the fixed point
    std::vector<int> stack;
    for (int e : w.letters()) {
        if (!stack.empty() && stack.back() == -e) {
            stack.pop_back();
        } else {
            stack.push_back(e);
        }
    }
    return BraidWord(w.strand_count(), std::move(stack));
}

BraidWord tau(const BraidWord& w) {
    const int n = w.strand_count();
    std::vector<int> letters;
    letters.reserve(w.length());
    for (int e : w.letters()) letters.push_back(e > 0 ? n - e : -(n + e));
    return BraidWord(n, std::move(letters));
}

Permutation closure_permutation(const BraidWord& w) {
    const int n = w.strand_count();
    // strand_at[p] = starting position of the strand currently at p
    std::vector<int> strand_at(static_cast<std::size_t>(n));
    std::iota(strand_at.begin(), strand_at.end(), 0);
    for (int e : w.letters()) {
        auto i = static_cast<std::size_t>(std::abs(e) - 1);
        std::swap(strand_at[i], strand_at[i + 1]);
    }
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) images[static_cast<std::size_t>(strand_at[static_cast<std::size_t>(p)])] = p;
    return Permutation(std::move(images));
}

StrandComponentMap components(const BraidWord& w) {
    StrandComponentMap map;
    map.component_of_strand.assign(static_cast<std::size_t>(w.strand_count()), -1);
    for (const auto& cycle : closure_permutation(w).cycles()) {
        for (int s : cycle) map.component_of_strand[static_cast<std::size_t>(s)] = map.component_count;
        ++map.component_count;
    }
    return map;
}

long long exponent_sum(const BraidWord& w) {
    long long sum = 0;
    for (int e : w.letters()) sum += e > 0 ? 1 : -1;
    return sum;
}

LinkingMatrix linking_matrix(const BraidWord& w) {
    const auto comp = components(w);
    const int k = comp.component_count;
    std::vector<long long> twice(static_cast<std::size_t>(k * k), 0);

    std::vector<int> strand_at(static_cast<std::size_t>(w.strand_count()));
    std::iota(strand_at.begin(), strand_at.end(), 0);
    for (int e : w.letters()) {
        auto i = static_cast<std::size_t>(std::abs(e) - 1);
        int a = comp.component_of_strand[static_cast<std::size_t>(strand_at[i])];
        int b = comp.component_of_strand[static_cast<std::size_t>(strand_at[i + 1])];
        if (a != b) {
            int sign = e > 0 ? 1 : -1;
            twice[static_cast<std::size_t>(a * k + b)] += sign;
            twice[static_cast<std::size_t>(b * k + a)] += sign;
        }
        std::swap(strand_at[i], strand_at[i + 1]);
    }

    LinkingMatrix lk{k, std::vector<long long>(twice.size(), 0)};
    for (std::size_t idx = 0; idx < twice.size(); ++idx) {
        // crossings between two closed components come in even number
        if (twice[idx] % 2 != 0) throw std::logic_error("odd inter-component crossing count");
        lk.entries[idx] = twice[idx] / 2;
    }
    return lk;
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
    require_same_strands(w, g, "conjugate");
    return concat(concat(g, w), invert(g));
}

BraidWord stabilize(const BraidWord& w, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("stabilization sign must be +1 or -1");
    std::vector<int> letters = w.letters();
    letters.push_back(sign * w.strand_count());
    return BraidWord(w.strand_count() + 1, std::move(letters));
}

}  // namespace braidlink
