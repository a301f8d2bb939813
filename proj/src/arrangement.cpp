#include "braidlink/arrangement.hpp"

#include <algorithm>
#include <array>

namespace braidlink {

namespace {

Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }

constexpr std::array<DoublePoint, 8> kDoublePoints = {DoublePoint::p0, DoublePoint::p1, DoublePoint::p2,
                                                      DoublePoint::p3, DoublePoint::q0, DoublePoint::q1,
                                                      DoublePoint::q2, DoublePoint::q3};

// a strictly before b, both canonical
bool angle_less(const Vec2& a, const Vec2& b) { return cross(a, b) > 0; }

}  // namespace

std::string_view label_name(LineLabel label) {
    switch (label) {
        case LineLabel::l0: return "l0";
        case LineLabel::l1: return "l1";
        case LineLabel::l2: return "l2";
        case LineLabel::l3: return "l3";
        case LineLabel::lp0: return "l'0";
        case LineLabel::lp1: return "l'1";
        case LineLabel::lp2: return "l'2";
        case LineLabel::lp3: return "l'3";
        case LineLabel::axis: return "L";
        case LineLabel::axis_at_infinity: return "L'";
    }
    return "?";
}

LineLabel line_label(int k, bool primed) {
    k = ((k % 4) + 4) % 4;
    return static_cast<LineLabel>((primed ? 4 : 0) + k);
}

Point3 OrientedLine3::at(const Rational& s) const {
    return {base.x + s * direction.x, base.y + s * direction.y, base.z + s * direction.z};
}

Rational OrientedLine3::angular_speed() const { return base.x * direction.y - base.y * direction.x; }

bool OrientedLine3::same_line(const OrientedLine3& other) const {
    // parallel directions and other.base on this line
    const Point3& d = direction;
    const Point3& e = other.direction;
    auto parallel = [](const Point3& u, const Point3& v) {
        return u.y * v.z - u.z * v.y == 0 && u.z * v.x - u.x * v.z == 0 && u.x * v.y - u.y * v.x == 0;
    };
    Point3 offset{other.base.x - base.x, other.base.y - base.y, other.base.z - base.z};
    return parallel(d, e) && parallel(d, offset);
}

Point3 rotate_quarter(const Point3& p) { return {-p.y, p.x, p.z}; }

Point3 point_p(int k) {
    Point3 p{3, -1, -1};
    for (int i = 0; i < ((k % 4) + 4) % 4; ++i) p = rotate_quarter(p);
    return p;
}

Point3 point_q(int k) {
    Point3 q{3, 1, 1};
    for (int i = 0; i < ((k % 4) + 4) % 4; ++i) q = rotate_quarter(q);
    return q;
}

namespace {

OrientedLine3 upward_line(const Point3& a, const Point3& b, LineLabel label) {
    Point3 d{b.x - a.x, b.y - a.y, b.z - a.z};
    if (d.z == 0) throw GenericityError("line " + std::string(label_name(label)) + " is horizontal");
    if (d.z < 0) d = {-d.x, -d.y, -d.z};
    return {a, d, label};
}

}  // namespace

std::vector<OrientedLine3> build_configuration() {
    std::vector<OrientedLine3> lines;
    for (int k = 0; k < 4; ++k) lines.push_back(upward_line(point_p(k), point_q(k), line_label(k, false)));
    for (int k = 0; k < 4; ++k) lines.push_back(upward_line(point_p(k), point_q(k + 1), line_label(k, true)));
    return lines;
}

OrientedLine3 axis_line() { return {{0, 0, 0}, {0, 0, 1}, LineLabel::axis}; }

std::string_view projection_name(Projection p) { return p == Projection::oxy ? "oxy" : "oxz"; }

ProjectedLine project(const OrientedLine3& line, Projection projection) {
    const Point3& b = line.base;
    const Point3& d = line.direction;
    if (projection == Projection::oxy) return {line.label, {b.x, b.y}, {d.x, d.y}, b.z, d.z};
    return {line.label, {b.x, b.z}, {d.x, d.z}, -b.y, -d.y};
}

std::string_view double_point_name(DoublePoint d) {
    static constexpr std::array<std::string_view, 8> names = {"p0", "p1", "p2", "p3", "q0", "q1", "q2", "q3"};
    return names[static_cast<std::size_t>(d)];
}

Point3 double_point_location(DoublePoint d) {
    const int k = static_cast<int>(d) % 4;
    return static_cast<int>(d) < 4 ? point_p(k) : point_q(k);
}

std::string_view resolution_name(Resolution r) {
    switch (r) {
        case Resolution::smooth: return "smooth";
        case Resolution::positive_crossing: return "positive";
        case Resolution::negative_crossing: return "negative";
    }
    return "?";
}

SmoothingChoice paper_smoothing() {
    SmoothingChoice choice;
    for (DoublePoint d : kDoublePoints) choice[d] = Resolution::smooth;
    choice[DoublePoint::q0] = Resolution::negative_crossing;
    return choice;
}

SmoothingChoice positive_q0_smoothing() {
    SmoothingChoice choice = paper_smoothing();
    choice[DoublePoint::q0] = Resolution::positive_crossing;
    return choice;
}

Vec2 canonical_direction(const Vec2& v) {
    if (v.x == 0 && v.y == 0) throw GenericityError("zero direction has no angle");
    if (v.y > 0 || (v.y == 0 && v.x > 0)) return v;
    return {-v.x, -v.y};
}

std::vector<CrossingEvent> project_crossings(std::span<const OrientedLine3> lines, Projection projection) {
    std::vector<ProjectedLine> images;
    images.reserve(lines.size());
    for (const auto& line : lines) images.push_back(project(line, projection));

    std::vector<CrossingEvent> events;
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size(); ++j) {
            const ProjectedLine& a = images[i];
            const ProjectedLine& b = images[j];
            const Rational det = cross(a.direction, b.direction);
            const Vec2 offset = b.point - a.point;

            if (det == 0) {
                if (cross(offset, a.direction) == 0) {
                    throw GenericityError("projections of " + std::string(label_name(a.label)) + " and " +
                                          std::string(label_name(b.label)) + " coincide");
                }
                if (projection != Projection::oxy) continue;
                // parallel images meet on the line at infinity, which is the
                // image of L'; order the three by depth slope per unit of the
                // common image direction
                CrossingEvent ev;
                ev.kind = EventKind::at_infinity;
                ev.position = canonical_direction(a.direction);
                ev.sweep_direction = ev.position;
                ev.strands = {a.label, b.label, LineLabel::axis_at_infinity};
                auto key = [&ev](const ProjectedLine& l) {
                    Rational scale = ev.position.x != 0 ? l.direction.x / ev.position.x : l.direction.y / ev.position.y;
                    return Rational(l.depth_slope / scale);
                };
                std::vector<std::pair<Rational, LineLabel>> order = {
                    {key(a), a.label}, {key(b), b.label}, {Rational(0), LineLabel::axis_at_infinity}};
                std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
                if (order[0].first == order[1].first || order[1].first == order[2].first) {
                    throw GenericityError("degenerate depth order at infinity");
                }
                for (const auto& [k, label] : order) ev.over_under.push_back(label);
                ev.sign = 1;
                events.push_back(std::move(ev));
                continue;
            }

            const Rational s = cross(offset, b.direction) / det;
            const Rational u = cross(offset, a.direction) / det;
            CrossingEvent ev;
            ev.kind = EventKind::finite;
            ev.position = {a.point.x + s * a.direction.x, a.point.y + s * a.direction.y};
            ev.strands = {a.label, b.label};
            if (projection == Projection::oxy) {
                if (ev.position.x == 0 && ev.position.y == 0) {
                    throw GenericityError("crossing on the rotation axis");
                }
                ev.sweep_direction = canonical_direction(ev.position);
            }

            const Rational depth_a = a.depth_base + s * a.depth_slope;
            const Rational depth_b = b.depth_base + u * b.depth_slope;
            const bool a_first_positive = cross(a.direction, b.direction) > 0;
            if (depth_a == depth_b) {
                const Point3 where = lines[i].at(s);
                auto it = std::find_if(kDoublePoints.begin(), kDoublePoints.end(),
                                       [&where](DoublePoint d) { return double_point_location(d) == where; });
                if (it == kDoublePoints.end()) {
                    throw GenericityError("unexpected spatial intersection of " + std::string(label_name(a.label)) +
                                          " and " + std::string(label_name(b.label)));
                }
                ev.double_point = *it;
                ev.positive_order = a_first_positive ? std::vector{a.label, b.label} : std::vector{b.label, a.label};
            } else {
                const bool a_over = depth_a > depth_b;
                ev.over_under = a_over ? std::vector{a.label, b.label} : std::vector{b.label, a.label};
                // positive iff (over direction) x (under direction) > 0
                ev.sign = (a_over == a_first_positive) ? 1 : -1;
            }
            events.push_back(std::move(ev));
        }
    }

    // the Oxz image is not swept; its sweep directions stay zero and the
    // order below falls through to position
    std::stable_sort(events.begin(), events.end(), [](const CrossingEvent& x, const CrossingEvent& y) {
        if (angle_less(x.sweep_direction, y.sweep_direction)) return true;
        if (angle_less(y.sweep_direction, x.sweep_direction)) return false;
        if (x.kind != y.kind) return x.kind == EventKind::finite;
        if (x.position.x != y.position.x) return x.position.x < y.position.x;
        return x.position.y < y.position.y;
    });
    return events;
}

std::vector<CrossingEvent> apply_smoothing(std::vector<CrossingEvent> events, const SmoothingChoice& choice) {
    for (auto& ev : events) {
        if (!ev.double_point) continue;
        auto it = choice.find(*ev.double_point);
        if (it == choice.end()) {
            throw std::invalid_argument("smoothing choice has no entry for " +
                                        std::string(double_point_name(*ev.double_point)));
        }
        ev.resolution = it->second;
        switch (it->second) {
            case Resolution::smooth:
                ev.sign = 0;
                ev.over_under.clear();
                break;
            case Resolution::positive_crossing:
                ev.sign = 1;
                ev.over_under = ev.positive_order;
                break;
            case Resolution::negative_crossing:
                ev.sign = -1;
                ev.over_under = {ev.positive_order[1], ev.positive_order[0]};
                break;
        }
    }
    return events;
}

BraidWord full_turn(const BraidWord& half) { return concat(half, tau(half)); }

}  // namespace braidlink
