#pragma once

#include "braidlink/arrangement.hpp"
#include "braidlink/braid.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace braidlink {

/// Half-turn words as displayed for the degree-8 example, in braid text.
/// beta'_{1/2} is the scan of the Oxy projection; beta_{1/2} carries the
/// other axis as the trailing descending run s8 s7 ... s1.
inline constexpr std::string_view kBetaPrimeHalfText =
    "B9 s1 D45 s8  s2^-1  s3 s6  s2 D45 s7  s3 s6  s1 D45 s8  s3 s6  s2 D45 s7  s3 s6";
inline constexpr std::string_view kBetaHalfText =
    "B9 s1 s4 s7  s2^-1  s3 s5  s2 s4 s6  s3 s5  s1 s4 s7  s3 s5  s2 s4 s6  s3 s5  s8 s7 s6 s5 s4 s3 s2 s1";

/// A half-turn word together with the strand (0-based start position) that
/// carries the axis line rather than the curve.
struct HalfTurnFixture {
    BraidWord half;
    int axis_strand = 0;
};

struct PaperFixtures {
    HalfTurnFixture beta;
    HalfTurnFixture beta_prime;
};

/// The embedded fixtures: beta_{1/2} with axis strand 8, beta'_{1/2} with
/// the strand at infinity (position 5, index 4).
PaperFixtures embedded_fixtures();

struct PaperBraids {
    BraidWord beta;
    BraidWord beta_prime;
    /// beta with every s2^-1 replaced by s2.
    BraidWord beta_positive_variant;
};

PaperBraids paper_braids();

/// Replaces every letter -2 by 2.
BraidWord positive_q0_variant(const BraidWord& w);

/// Components of the link in projective space whose double cover is the
/// closure of full_turn(half): the end of a strand at position j continues
/// as the strand starting at position n-1-j.
StrandComponentMap projective_components(const BraidWord& half);

/// Sum of the linking numbers between the component containing
/// `axis_strand` and every other component.
long long linking_with_axis(const BraidWord& w, int axis_strand);

/// Image points annotated next to the beta'_{1/2} display: the sixteen
/// ordinary crossings met by the scan plus q0 = (3,1).
std::vector<Vec2> annotated_crossings();

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// The reproduction checks behind `braidlink paper verify`.
std::vector<CheckResult> verify_paper(const PaperFixtures& fixtures = embedded_fixtures());

}  // namespace braidlink
