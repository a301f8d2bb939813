#include "braidlink/arrangement.hpp"

#include <algorithm>
#include <cstdlib>

namespace braidlink {

namespace {

Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }

// Representative of v's direction class inside the half-turn [start, -start).
Vec2 relative_to(const Vec2& start, const Vec2& v) {
    const Rational c = cross(start, v);
    if (c > 0 || (c == 0 && dot(start, v) > 0)) return v;
    return -v;
}

// Position (1-based) of every strand on the scanning line with direction d,
// listing the points of the ray d outwards, then infinity, then the ray -d
// inwards. A point r*d sorts by -1/r, which is -(a*dx + b*dy)/c for the line
// a*u + b*v = c and 0 for the point at infinity.
std::map<LineLabel, int> strand_positions(const std::vector<ProjectedLine>& images, const Vec2& d) {
    std::vector<std::pair<Rational, LineLabel>> keyed;
    for (const auto& img : images) {
        const Rational c = img.c();
        if (c == 0) throw GenericityError("line " + std::string(label_name(img.label)) + " meets the rotation axis");
        keyed.emplace_back(-(img.a() * d.x + img.b() * d.y) / c, img.label);
    }
    keyed.emplace_back(Rational(0), LineLabel::axis_at_infinity);
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::map<LineLabel, int> position;
    for (std::size_t k = 0; k < keyed.size(); ++k) {
        if (k > 0 && keyed[k].first == keyed[k - 1].first) {
            throw GenericityError("scanning line meets " + std::string(label_name(keyed[k].second)) + " and " +
                                  std::string(label_name(keyed[k - 1].second)) + " at the same point");
        }
        position[keyed[k].second] = static_cast<int>(k) + 1;
    }
    return position;
}

struct PlacedEvent {
    int low = 0;   // first generator index used
    int high = 0;  // last generator index used
    std::vector<int> letters;
};

}  // namespace

BraidWord sweep_half_turn(std::span<const CrossingEvent> events, std::span<const OrientedLine3> lines,
                          const Vec2& start) {
    if (start.x == 0 && start.y == 0) throw std::invalid_argument("sweep start direction is zero");
    std::vector<ProjectedLine> images;
    for (const auto& line : lines) images.push_back(project(line, Projection::oxy));
    const int strand_count = static_cast<int>(images.size()) + 1;

    // group events by their angle within the half-turn; smoothed double
    // points add no letter but still bound the sampling intervals
    std::vector<std::pair<Vec2, std::vector<const CrossingEvent*>>> groups;
    std::vector<const CrossingEvent*> active;
    for (const auto& ev : events) active.push_back(&ev);
    std::stable_sort(active.begin(), active.end(), [&start](const CrossingEvent* x, const CrossingEvent* y) {
        return cross(relative_to(start, x->sweep_direction), relative_to(start, y->sweep_direction)) > 0;
    });
    for (const CrossingEvent* ev : active) {
        Vec2 d = relative_to(start, ev->sweep_direction);
        if (groups.empty() || cross(groups.back().first, d) != 0) groups.push_back({d, {}});
        groups.back().second.push_back(ev);
    }

    std::vector<int> word;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const Vec2& here = groups[g].first;
        // a direction strictly between the previous event angle and this one
        Vec2 before;
        if (g > 0) {
            before = groups[g - 1].first + here;
        } else if (groups.size() > 1) {
            before = here - groups.back().first;
        } else {
            before = {here.y, -here.x};
        }
        const auto position = strand_positions(images, before);

        std::vector<PlacedEvent> placed;
        for (const CrossingEvent* ev : groups[g].second) {
            if (ev->sign == 0) continue;
            std::vector<int> at;
            for (LineLabel label : ev->strands) {
                auto it = position.find(label);
                if (it == position.end()) {
                    throw std::invalid_argument("event strand " + std::string(label_name(label)) +
                                                " is not among the swept lines");
                }
                at.push_back(it->second);
            }
            std::sort(at.begin(), at.end());
            for (std::size_t k = 1; k < at.size(); ++k) {
                if (at[k] != at[k - 1] + 1) throw GenericityError("event strands are not adjacent on the scanning line");
            }
            PlacedEvent p;
            const int i = at.front();
            if (ev->kind == EventKind::finite) {
                p = {i, i, {ev->sign * i}};
            } else {
                if (at.size() != 3 || position.at(LineLabel::axis_at_infinity) != i + 1) {
                    throw GenericityError("triple point at infinity is not centred on L'");
                }
                p = {i, i + 1, {ev->sign * i, ev->sign * (i + 1), ev->sign * i}};
            }
            placed.push_back(std::move(p));
        }
        std::sort(placed.begin(), placed.end(), [](const PlacedEvent& x, const PlacedEvent& y) { return x.low < y.low; });
        for (std::size_t k = 1; k < placed.size(); ++k) {
            if (placed[k].low < placed[k - 1].high + 2) {
                throw GenericityError("simultaneous events do not commute");
            }
        }
        for (const auto& p : placed) word.insert(word.end(), p.letters.begin(), p.letters.end());
    }
    return BraidWord(strand_count, std::move(word));
}

}  // namespace braidlink
