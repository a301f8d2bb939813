#include "braidlink/paper.hpp"

#include "braidlink/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace braidlink {

namespace {

std::string describe_components(const BraidWord& w) {
    const auto map = components(w);
    std::ostringstream os;
    os << map.component_count << " components " << closure_permutation(w).to_cycle_string();
    return os.str();
}

bool curve_is_single_component(const StrandComponentMap& map, int axis_strand) {
    const int axis = map.component_of_strand[static_cast<std::size_t>(axis_strand)];
    int curve = -1;
    for (std::size_t s = 0; s < map.component_of_strand.size(); ++s) {
        const int c = map.component_of_strand[s];
        if (c == axis) continue;
        if (curve == -1) curve = c;
        if (c != curve) return false;
    }
    return curve != -1 && map.strands_of(axis).size() == 1;
}

bool contains_point(const std::vector<Vec2>& points, const Vec2& p) {
    return std::find(points.begin(), points.end(), p) != points.end();
}

}  // namespace

PaperFixtures embedded_fixtures() {
    return {{parse_braid(kBetaHalfText), 8}, {parse_braid(kBetaPrimeHalfText), 4}};
}

BraidWord positive_q0_variant(const BraidWord& w) {
    std::vector<int> letters = w.letters();
    std::replace(letters.begin(), letters.end(), -2, 2);
    return BraidWord(w.strand_count(), std::move(letters));
}

PaperBraids paper_braids() {
    const auto fixtures = embedded_fixtures();
    BraidWord beta = full_turn(fixtures.beta.half);
    BraidWord beta_prime = full_turn(fixtures.beta_prime.half);
    BraidWord variant = full_turn(positive_q0_variant(fixtures.beta.half));
    return {std::move(beta), std::move(beta_prime), std::move(variant)};
}

StrandComponentMap projective_components(const BraidWord& half) {
    const int n = half.strand_count();
    const Permutation straight = closure_permutation(half);
    std::vector<int> twisted(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) twisted[static_cast<std::size_t>(s)] = n - 1 - straight[s];
    StrandComponentMap map;
    map.component_of_strand.assign(static_cast<std::size_t>(n), -1);
    for (const auto& cycle : Permutation(std::move(twisted)).cycles()) {
        for (int s : cycle) map.component_of_strand[static_cast<std::size_t>(s)] = map.component_count;
        ++map.component_count;
    }
    return map;
}

long long linking_with_axis(const BraidWord& w, int axis_strand) {
    const auto map = components(w);
    const auto lk = linking_matrix(w);
    const int axis = map.component_of_strand.at(static_cast<std::size_t>(axis_strand));
    long long total = 0;
    for (int c = 0; c < map.component_count; ++c) {
        if (c != axis) total += lk.at(axis, c);
    }
    return total;
}

std::vector<Vec2> annotated_crossings() {
    std::vector<Vec2> points;
    auto both = [&points](long x, long y) {
        points.push_back({x, y});
        points.push_back({-x, -y});
    };
    both(2, 0);
    points.push_back({3, 1});
    both(5, 3);
    both(3, 3);
    both(3, 5);
    both(0, 2);
    both(-3, 5);
    both(-3, 3);
    both(-5, 3);
    return points;
}

std::vector<CheckResult> verify_paper(const PaperFixtures& fixtures) {
    std::vector<CheckResult> results;
    const BraidWord beta = full_turn(fixtures.beta.half);
    const BraidWord beta_prime = full_turn(fixtures.beta_prime.half);

    mpz_class det_beta = -1;
    mpz_class det_beta_prime = -1;
    try {
        det_beta = link_determinant(beta);
        det_beta_prime = link_determinant(beta_prime);
        results.push_back({"determinant routes agree", true, "Seifert and Burau paths match on beta and beta'"});
    } catch (const DeterminantMismatch& e) {
        results.push_back({"determinant routes agree", false, e.what()});
    }

    results.push_back({"det(beta) = 0", det_beta == 0, "computed " + det_beta.get_str()});
    results.push_back({"det(beta') = 64", det_beta_prime == 64, "computed " + det_beta_prime.get_str()});

    {
        const auto map_beta = components(beta);
        const auto map_prime = components(beta_prime);
        const bool ok = map_beta.component_count == 2 && map_prime.component_count == 2 &&
                        curve_is_single_component(map_beta, fixtures.beta.axis_strand) &&
                        curve_is_single_component(map_prime, fixtures.beta_prime.axis_strand);
        results.push_back({"closures have 2 components, curve strands form one", ok,
                           "beta: " + describe_components(beta) + "; beta': " + describe_components(beta_prime)});
    }

    {
        const auto proj_beta = projective_components(fixtures.beta.half);
        const auto proj_prime = projective_components(fixtures.beta_prime.half);
        const bool ok = proj_beta.component_count == 2 && proj_prime.component_count == 2 &&
                        curve_is_single_component(proj_beta, fixtures.beta.axis_strand) &&
                        curve_is_single_component(proj_prime, fixtures.beta_prime.axis_strand);
        results.push_back({"curve is connected in projective space", ok,
                           "quotient components: beta " + std::to_string(proj_beta.component_count) + ", beta' " +
                               std::to_string(proj_prime.component_count)});
    }

    {
        const long long lk_beta = linking_with_axis(beta, fixtures.beta.axis_strand);
        const long long lk_prime = linking_with_axis(beta_prime, fixtures.beta_prime.axis_strand);
        results.push_back({"lk(C, L) from beta = lk(C, L') from beta' = 8", lk_beta == lk_prime && lk_beta == 8,
                           "lk " + std::to_string(lk_beta) + " and " + std::to_string(lk_prime)});
    }

    {
        const bool ok = (det_beta == 0 && det_beta_prime == 64) || (det_beta == 64 && det_beta_prime == 0);
        results.push_back({"determinant pair is {0, 64}", ok,
                           "{" + det_beta.get_str() + ", " + det_beta_prime.get_str() + "}"});
    }

    const auto lines = build_configuration();
    const auto events = apply_smoothing(project_crossings(lines, Projection::oxy), paper_smoothing());
    try {
        const BraidWord swept = sweep_half_turn(events, lines);
        results.push_back({"sweep reproduces beta'_{1/2}", swept == fixtures.beta_prime.half, swept.to_string()});
    } catch (const std::exception& e) {
        results.push_back({"sweep reproduces beta'_{1/2}", false, e.what()});
    }

    {
        std::vector<Vec2> ordinary;
        std::vector<Vec2> doubles;
        int at_infinity = 0;
        for (const auto& ev : events) {
            if (ev.kind == EventKind::at_infinity) {
                ++at_infinity;
            } else if (ev.double_point) {
                doubles.push_back(ev.position);
            } else {
                ordinary.push_back(ev.position);
            }
        }
        std::vector<Vec2> all = ordinary;
        all.insert(all.end(), doubles.begin(), doubles.end());
        const auto annotated = annotated_crossings();
        bool ok = at_infinity == 4 && doubles.size() == 8 && ordinary.size() == annotated.size() - 1;
        for (const auto& p : annotated) ok = ok && contains_point(all, p);
        ok = ok && contains_point(doubles, Vec2{3, 1}) && contains_point(doubles, Vec2{-3, -1});
        for (const auto& p : ordinary) ok = ok && contains_point(annotated, p);
        results.push_back({"crossing annotations present", ok,
                           std::to_string(ordinary.size()) + " ordinary, " + std::to_string(doubles.size()) +
                               " double points, " + std::to_string(at_infinity) + " triples at infinity"});
    }
    return results;
}

}  // namespace braidlink
