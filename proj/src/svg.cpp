#include "braidlink/arrangement.hpp"

#include <algorithm>
#include <sstream>

namespace braidlink {

namespace {

constexpr long kHalfWidth = 7;

// Fixed-point decimal with four places, rounded half away from zero using
// integer arithmetic only.
std::string decimal(const Rational& value) {
    mpz_class scaled = value.get_num() * 10000;
    const mpz_class& den = value.get_den();
    mpz_class q;
    mpz_class r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    if (2 * abs(r) >= den) q += sgn(scaled);
    const bool negative = q < 0;
    mpz_class mag = abs(q);
    std::string digits = mag.get_str();
    if (digits.size() < 5) digits.insert(0, 5 - digits.size(), '0');
    std::string out = (negative ? "-" : "") + digits.substr(0, digits.size() - 4) + "." + digits.substr(digits.size() - 4);
    return out == "-0.0000" ? "0.0000" : out;
}

struct Clipped {
    Rational s0;
    Rational s1;
};

// Parameter interval of point + s*direction inside the square viewport.
Clipped clip_to_viewport(const ProjectedLine& l) {
    Rational lo = -1000000;
    Rational hi = 1000000;
    auto restrict = [&](const Rational& p, const Rational& d) {
        if (d == 0) return;
        Rational a = (Rational(-kHalfWidth) - p) / d;
        Rational b = (Rational(kHalfWidth) - p) / d;
        if (a > b) std::swap(a, b);
        lo = std::max(lo, a);
        hi = std::min(hi, b);
    };
    restrict(l.point.x, l.direction.x);
    restrict(l.point.y, l.direction.y);
    return {lo, hi};
}

Vec2 image_at(const ProjectedLine& l, const Rational& s) {
    return {l.point.x + s * l.direction.x, l.point.y + s * l.direction.y};
}

// Sign of the hidden coordinate: z for Oxy, y for Oxz.
Rational hidden(const ProjectedLine& l, const Rational& s, Projection projection) {
    Rational depth = l.depth_base + s * l.depth_slope;
    return projection == Projection::oxy ? depth : Rational(-depth);
}

constexpr const char* kPositiveTone = "#000000";
constexpr const char* kNegativeTone = "#9a9a9a";

std::string gradient_id(LineLabel label) {
    std::string id = "tone-" + std::string(label_name(label));
    std::replace(id.begin(), id.end(), '\'', 'p');
    return id;
}

Rational parameter_of(const ProjectedLine& l, const Vec2& p) {
    return l.direction.x != 0 ? (p.x - l.point.x) / l.direction.x : (p.y - l.point.y) / l.direction.y;
}

}  // namespace

std::string emit_projection_svg(std::span<const OrientedLine3> lines, Projection projection,
                                const SmoothingChoice& smoothing) {
    std::vector<ProjectedLine> images;
    for (const auto& line : lines) images.push_back(project(line, projection));
    const auto events = apply_smoothing(project_crossings(lines, projection), smoothing);

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-7 -7 14 14\" width=\"560\" height=\"560\">\n";
    os << "<title>braidlink " << projection_name(projection) << " projection</title>\n";
    os << "<defs>\n";
    std::vector<Clipped> spans;
    for (const auto& img : images) {
        const Clipped c = clip_to_viewport(img);
        spans.push_back(c);
        const Vec2 a = image_at(img, c.s0);
        const Vec2 b = image_at(img, c.s1);
        const bool start_positive = hidden(img, c.s0, projection) > 0;
        const bool end_positive = hidden(img, c.s1, projection) > 0;
        // fraction of the drawn segment where the hidden coordinate vanishes
        Rational split = 0;
        if (img.depth_slope != 0) {
            const Rational zero_at = -img.depth_base / img.depth_slope;
            const Rational fraction = (zero_at - c.s0) / (c.s1 - c.s0);
            split = std::clamp(fraction, Rational(0), Rational(1));
        }
        os << "<linearGradient id=\"" << gradient_id(img.label) << "\" gradientUnits=\"userSpaceOnUse\" x1=\""
           << decimal(a.x) << "\" y1=\"" << decimal(a.y) << "\" x2=\"" << decimal(b.x) << "\" y2=\"" << decimal(b.y)
           << "\">";
        const char* first = start_positive ? kPositiveTone : kNegativeTone;
        const char* last = end_positive ? kPositiveTone : kNegativeTone;
        os << "<stop offset=\"0\" stop-color=\"" << first << "\"/>";
        os << "<stop offset=\"" << decimal(split) << "\" stop-color=\"" << first << "\"/>";
        os << "<stop offset=\"" << decimal(split) << "\" stop-color=\"" << last << "\"/>";
        os << "<stop offset=\"1\" stop-color=\"" << last << "\"/>";
        os << "</linearGradient>\n";
    }
    os << "</defs>\n";
    os << "<rect x=\"-7\" y=\"-7\" width=\"14\" height=\"14\" fill=\"#ffffff\"/>\n";
    os << "<g transform=\"scale(1,-1)\" stroke-linecap=\"butt\">\n";

    if (projection == Projection::oxy) {
        os << "<circle class=\"axis\" data-label=\"L\" cx=\"0\" cy=\"0\" r=\"0.12\" fill=\"#1f5fbf\"/>\n";
    } else {
        os << "<path class=\"axis\" data-label=\"L\" d=\"M 0 -7 L 0 7\" stroke=\"#1f5fbf\" stroke-width=\"0.04\" "
              "stroke-dasharray=\"0.2 0.15\" fill=\"none\"/>\n";
    }

    for (std::size_t k = 0; k < images.size(); ++k) {
        const auto& img = images[k];
        const Vec2 a = image_at(img, spans[k].s0);
        const Vec2 b = image_at(img, spans[k].s1);
        os << "<line class=\"strand\" data-label=\"" << label_name(img.label) << "\" x1=\"" << decimal(a.x)
           << "\" y1=\"" << decimal(a.y) << "\" x2=\"" << decimal(b.x) << "\" y2=\"" << decimal(b.y)
           << "\" stroke=\"url(#" << gradient_id(img.label) << ")\" stroke-width=\"0.08\"/>\n";
    }

    for (const auto& ev : events) {
        if (ev.kind != EventKind::finite) continue;
        const Vec2& p = ev.position;
        if (ev.sign == 0) {
            os << "<circle class=\"double-point\" data-label=\"" << double_point_name(*ev.double_point)
               << "\" cx=\"" << decimal(p.x) << "\" cy=\"" << decimal(p.y)
               << "\" r=\"0.16\" fill=\"none\" stroke=\"#c03030\" stroke-width=\"0.04\"/>\n";
            continue;
        }
        // redraw a short piece of the over strand on a white halo
        auto over = std::find_if(images.begin(), images.end(),
                                 [&ev](const ProjectedLine& l) { return l.label == ev.over_under.front(); });
        const Rational s = parameter_of(*over, p);
        const Rational reach = Rational(35, 100) / std::max(abs(over->direction.x), abs(over->direction.y));
        const Vec2 a = image_at(*over, s - reach);
        const Vec2 b = image_at(*over, s + reach);
        os << "<g class=\"crossing\" data-labels=\"" << label_name(ev.strands[0]) << " " << label_name(ev.strands[1])
           << "\" data-sign=\"" << ev.sign << "\">";
        os << "<line x1=\"" << decimal(a.x) << "\" y1=\"" << decimal(a.y) << "\" x2=\"" << decimal(b.x) << "\" y2=\""
           << decimal(b.y) << "\" stroke=\"#ffffff\" stroke-width=\"0.3\"/>";
        os << "<line x1=\"" << decimal(a.x) << "\" y1=\"" << decimal(a.y) << "\" x2=\"" << decimal(b.x) << "\" y2=\""
           << decimal(b.y) << "\" stroke=\"url(#" << gradient_id(over->label) << ")\" stroke-width=\"0.08\"/>";
        os << "</g>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace braidlink
