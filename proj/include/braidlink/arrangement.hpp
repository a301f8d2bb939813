#pragma once

#include "braidlink/braid.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidlink {

using Rational = mpq_class;

/// The configuration is not generic where it has to be.
class GenericityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Point3 {
    Rational x, y, z;
    friend bool operator==(const Point3&, const Point3&) = default;
};

struct Vec2 {
    Rational x, y;
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// Lines of the construction. l0..l3 pass through p_k, q_k; lp0..lp3 (the
/// primed lines) through p_k, q_{k+1}. `axis` is the z-axis L and
/// `axis_at_infinity` the common line at infinity L' of the planes z = const.
enum class LineLabel { l0, l1, l2, l3, lp0, lp1, lp2, lp3, axis, axis_at_infinity };

/// "l0".."l3", "l'0".."l'3", "L", "L'".
std::string_view label_name(LineLabel label);
LineLabel line_label(int k, bool primed);

struct OrientedLine3 {
    Point3 base;
    Point3 direction;
    LineLabel label;

    Point3 at(const Rational& s) const;
    /// x*dy - y*dx along the line. Independent of the parameter; positive
    /// iff the angle about the z-axis increases along the orientation.
    Rational angular_speed() const;
    /// Same point set.
    bool same_line(const OrientedLine3& other) const;
};

/// Quarter turn about the z-axis: (x, y, z) -> (-y, x, z).
Point3 rotate_quarter(const Point3& p);

Point3 point_p(int k);
Point3 point_q(int k);

/// The eight lines l0..l3, l'0..l'3, each oriented with dz > 0.
std::vector<OrientedLine3> build_configuration();

/// L, oriented upwards.
OrientedLine3 axis_line();

enum class Projection { oxy, oxz };
std::string_view projection_name(Projection p);

/// Image of a spatial line in a coordinate projection. `depth` is the
/// coordinate that increases toward the viewer (z for Oxy, -y for Oxz),
/// affine in the line parameter.
struct ProjectedLine {
    LineLabel label;
    Vec2 point;
    Vec2 direction;
    Rational depth_base;
    Rational depth_slope;

    /// Coefficients of a*u + b*v = c.
    Rational a() const { return -direction.y; }
    Rational b() const { return direction.x; }
    Rational c() const { return a() * point.x + b() * point.y; }
};

ProjectedLine project(const OrientedLine3& line, Projection projection);

/// The spatial double points of the configuration.
enum class DoublePoint { p0, p1, p2, p3, q0, q1, q2, q3 };
std::string_view double_point_name(DoublePoint d);
Point3 double_point_location(DoublePoint d);

enum class EventKind { finite, at_infinity };

/// How a double point of the line union is perturbed: an orientation-
/// respecting smoothing (no crossing survives) or a crossing of given sign.
enum class Resolution { smooth, positive_crossing, negative_crossing };
std::string_view resolution_name(Resolution r);

using SmoothingChoice = std::map<DoublePoint, Resolution>;

/// q0 becomes a negative crossing, every other double point is smoothed.
SmoothingChoice paper_smoothing();
/// q0 becomes a positive crossing, every other double point is smoothed.
SmoothingChoice positive_q0_smoothing();

struct CrossingEvent {
    EventKind kind = EventKind::finite;
    /// Image point for finite events, projective direction for events at
    /// infinity.
    Vec2 position;
    /// Participating lines in label order: two for finite events, the two
    /// parallel lines plus L' at infinity.
    std::vector<LineLabel> strands;
    /// Strands from the one nearest the viewer down; empty for an
    /// unresolved double point.
    std::vector<LineLabel> over_under;
    /// Crossing sign; 0 for a double point that is unresolved or smoothed.
    int sign = 0;
    std::optional<DoublePoint> double_point;
    std::optional<Resolution> resolution;
    /// For double points: the over/under order a positive crossing would have.
    std::vector<LineLabel> positive_order;
    /// Direction of the line through the origin that meets the event, with
    /// angle in [0, pi). Zero for the Oxz projection, which is not swept.
    Vec2 sweep_direction;
};

/// Representative of the direction class of `v` with angle in [0, pi).
Vec2 canonical_direction(const Vec2& v);

/// All pairwise crossings of the projected lines. Lines that meet in space
/// give double-point events awaiting a smoothing; for Oxy each class of
/// projected-parallel lines gives one triple event at infinity with L'.
std::vector<CrossingEvent> project_crossings(std::span<const OrientedLine3> lines, Projection projection);

/// Resolves every double point by `choice`; throws std::invalid_argument if
/// a double point is missing from the choice.
std::vector<CrossingEvent> apply_smoothing(std::vector<CrossingEvent> events, const SmoothingChoice& choice);

/// Braid read off by a line rotating about the origin through half a turn
/// from `start`, for the Oxy projection of `lines`.
///
/// Points of the scanning line are ordered from the origin outwards along
/// the ray `d`, then the point at infinity (the strand L'), then inwards
/// along the opposite ray. A finite crossing between positions i, i+1 gives
/// sigma_i^sign; a triple point at infinity at positions i..i+2 gives the
/// half twist sigma_i sigma_{i+1} sigma_i. Simultaneous events are emitted
/// in increasing position and must commute.
BraidWord sweep_half_turn(std::span<const CrossingEvent> events, std::span<const OrientedLine3> lines,
                          const Vec2& start = {1, 0});

/// half followed by tau(half): the second half-turn sees the scanning line
/// with reversed orientation.
BraidWord full_turn(const BraidWord& half);

/// Figures of the projections, two-tone strokes for the sign of the hidden
/// coordinate, gaps at crossings. Fixed viewport [-7, 7]^2; byte-for-byte
/// deterministic.
std::string emit_projection_svg(std::span<const OrientedLine3> lines, Projection projection,
                                const SmoothingChoice& smoothing);

}  // namespace braidlink
