#include "commands.hpp"

#include "braidlink/arrangement.hpp"
#include "braidlink/invariants.hpp"
#include "braidlink/paper.hpp"
#include "braidlink/report_json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace braidlink::cli {

namespace {

constexpr std::string_view kCrossingsSchema = "braidlink.crossings/1";
constexpr std::string_view kVerifySchema = "braidlink.paper-verify/1";

struct InvariantsOptions {
    std::vector<std::string> word;
    std::vector<long> alexander_at;
    bool json = false;
    bool matrix = false;
};

struct PaperOptions {
    std::string action = "verify";
    std::string variant = "paper";
    bool json = false;
};

struct ConstructOptions {
    std::string projection = "oxy";
    std::string smoothing = "paper";
    std::string emit = "braid";
    bool half = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_word_text(const std::vector<std::string>& tokens, std::istream& in) {
    if (tokens.size() == 1 && tokens.front() == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    if (tokens.size() == 1 && tokens.front().starts_with('@')) {
        const std::string path = tokens.front().substr(1);
        std::ifstream file(path);
        if (!file) throw UsageError("cannot read braid file '" + path + "'");
        return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    }
    std::string text;
    for (const auto& t : tokens) text += t + " ";
    return text;
}

std::string rational_text(const Rational& r) { return r.get_str(); }

Json point_json(const Vec2& p) { return Json::array({rational_text(p.x), rational_text(p.y)}); }

Json labels_json(const std::vector<LineLabel>& labels) {
    Json out = Json::array();
    for (LineLabel l : labels) out.push_back(label_name(l));
    return out;
}

Json crossings_json(const std::vector<CrossingEvent>& events, Projection projection) {
    Json out;
    out["schema"] = kCrossingsSchema;
    out["projection"] = projection_name(projection);
    Json list = Json::array();
    for (const auto& ev : events) {
        Json e;
        e["kind"] = ev.kind == EventKind::finite ? "finite" : "at_infinity";
        e["position"] = point_json(ev.position);
        e["labels"] = labels_json(ev.strands);
        e["over_under"] = labels_json(ev.over_under);
        e["sign"] = ev.sign;
        e["double_point"] = ev.double_point ? Json(double_point_name(*ev.double_point)) : Json(nullptr);
        e["resolution"] = ev.resolution ? Json(resolution_name(*ev.resolution)) : Json(nullptr);
        e["sweep_direction"] = point_json(ev.sweep_direction);
        list.push_back(std::move(e));
    }
    out["events"] = std::move(list);
    return out;
}

void print_report_text(const InvariantReport& r, std::ostream& out) {
    out << "strand_count: " << r.strand_count << "\n";
    out << "components: " << r.components.component_count << "\n";
    out << "component_of_strand:";
    for (int c : r.components.component_of_strand) out << " " << c;
    out << "\n";
    out << "exponent_sum: " << r.exponent_sum << "\n";
    out << "linking:\n";
    for (int p = 0; p < r.linking.size; ++p) {
        out << "  [";
        for (int q = 0; q < r.linking.size; ++q) out << (q ? ", " : "") << r.linking.at(p, q);
        out << "]\n";
    }
    out << "determinant: " << r.determinant().get_str() << "\n";
    out << "alexander: " << r.alexander.to_string() << "\n";
    for (const auto& v : r.alexander_at) out << "alexander(" << v.t << "): " << v.value.get_str() << "\n";
}

int cmd_invariants(const InvariantsOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    BraidWord w = parse_braid(read_word_text(opt.word, in));
    std::vector<long> points = opt.alexander_at.empty() ? std::vector<long>{-1} : opt.alexander_at;
    const InvariantReport report = full_report(w, points);
    if (opt.json) {
        Json j = to_json(report);
        if (opt.matrix) {
            const SeifertData s = seifert_matrix(w);
            j["seifert"] = {{"split", s.split},
                            {"V", to_json(s.matrix)},
                            {"V_plus_VT", to_json(s.matrix + s.matrix.transposed())}};
        }
        out << j.dump(2) << "\n";
    } else {
        print_report_text(report, out);
        if (opt.matrix) {
            const SeifertData s = seifert_matrix(w);
            out << "seifert V (" << s.matrix.rows() << "x" << s.matrix.cols() << (s.split ? ", split" : "") << "):\n"
                << s.matrix.to_string();
            out << "V + V^T:\n" << (s.matrix + s.matrix.transposed()).to_string();
        }
    }
    (void)err;
    return kSuccess;
}

int cmd_paper(const PaperOptions& opt, std::ostream& out) {
    if (opt.variant == "positive-q0") {
        // the remark's variant: report, assert nothing about paper values
        const auto lines = build_configuration();
        const auto events = apply_smoothing(project_crossings(lines, Projection::oxy), positive_q0_smoothing());
        const BraidWord beta_prime_variant = full_turn(sweep_half_turn(events, lines));
        const BraidWord beta_variant = paper_braids().beta_positive_variant;
        const InvariantReport rb = full_report(beta_variant);
        const InvariantReport rp = full_report(beta_prime_variant);
        if (opt.json) {
            Json j;
            j["schema"] = kVerifySchema;
            j["variant"] = "positive-q0";
            j["beta"] = {{"word", beta_variant.to_string()}, {"report", to_json(rb)}};
            j["beta_prime"] = {{"word", beta_prime_variant.to_string()}, {"report", to_json(rp)}};
            out << j.dump(2) << "\n";
        } else {
            out << "variant positive-q0 (s2^-1 -> s2)\n";
            out << "beta+ : " << beta_variant.to_string() << "\n";
            print_report_text(rb, out);
            out << "beta'+: " << beta_prime_variant.to_string() << "\n";
            print_report_text(rp, out);
        }
        return kSuccess;
    }

    const auto results = verify_paper();
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    if (opt.json) {
        Json j;
        j["schema"] = kVerifySchema;
        j["variant"] = "paper";
        Json checks = Json::array();
        for (const auto& r : results) checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        j["checks"] = std::move(checks);
        j["passed"] = all;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  (" << r.detail << ")\n";
        out << (all ? "all checks passed" : "some checks failed") << "\n";
    }
    return all ? kSuccess : kVerificationFailure;
}

int cmd_construct(const ConstructOptions& opt, std::ostream& out) {
    const Projection projection = opt.projection == "oxy" ? Projection::oxy : Projection::oxz;
    const SmoothingChoice smoothing = opt.smoothing == "paper" ? paper_smoothing() : positive_q0_smoothing();
    if (opt.emit == "braid" && projection != Projection::oxy) {
        throw UsageError("--emit braid needs --projection oxy");
    }
    const auto lines = build_configuration();

    if (opt.emit == "svg") {
        out << emit_projection_svg(lines, projection, smoothing);
        return kSuccess;
    }
    const auto events = apply_smoothing(project_crossings(lines, projection), smoothing);
    if (opt.emit == "crossings") {
        out << crossings_json(events, projection).dump(2) << "\n";
        return kSuccess;
    }
    const BraidWord half = sweep_half_turn(events, lines);
    out << (opt.half ? half : full_turn(half)).to_string() << "\n";
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed-braid link invariants and the degree-8 line-arrangement construction", "braidlink"};
    app.require_subcommand(1);

    InvariantsOptions inv;
    auto* invariants = app.add_subcommand("invariants", "Invariants of a closed braid");
    invariants->add_flag("--json", inv.json, "JSON output");
    invariants->add_flag("--matrix", inv.matrix, "Also print the Seifert matrix V and V + V^T");
    invariants->add_option("--alexander-at", inv.alexander_at, "Evaluate the Alexander polynomial at integer t")
        ->allow_extra_args(false);
    invariants->add_option("word", inv.word, "Braid text, @file, or - for standard input")->required();

    PaperOptions pap;
    auto* paper = app.add_subcommand("paper", "Reproduce the determinant computation for the degree-8 example");
    paper->add_option("action", pap.action, "Only 'verify'")->check(CLI::IsMember({"verify"}));
    paper->add_option("--variant", pap.variant, "paper or positive-q0")
        ->check(CLI::IsMember({"paper", "positive-q0"}));
    paper->add_flag("--json", pap.json, "JSON output");

    ConstructOptions con;
    auto* construct = app.add_subcommand("construct", "Build the line arrangement and emit an artifact");
    construct->add_option("--projection", con.projection, "oxy or oxz")->check(CLI::IsMember({"oxy", "oxz"}));
    construct->add_option("--smoothing", con.smoothing, "paper or all-positive")
        ->check(CLI::IsMember({"paper", "all-positive"}));
    construct->add_option("--emit", con.emit, "braid, crossings or svg")
        ->check(CLI::IsMember({"braid", "crossings", "svg"}));
    construct->add_flag("--half", con.half, "Emit only the half-turn word");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (invariants->parsed()) return cmd_invariants(inv, in, out, err);
        if (paper->parsed()) return cmd_paper(pap, out);
        if (construct->parsed()) return cmd_construct(con, out);
    } catch (const ParseError& e) {
        err << "braidlink: " << e.what() << "\n";
        return kUsageError;
    } catch (const UsageError& e) {
        err << "braidlink: " << e.what() << "\n";
        return kUsageError;
    } catch (const DeterminantMismatch& e) {
        err << "braidlink: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const GenericityError& e) {
        err << "braidlink: configuration is not generic: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const std::invalid_argument& e) {
        err << "braidlink: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace braidlink::cli
