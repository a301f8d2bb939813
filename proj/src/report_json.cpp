#include "braidlink/report_json.hpp"


namespace braidlink {

Json integer_json(const mpz_class& value) {
    if (value.fits_slong_p()) return Json(static_cast<long long>(value.get_si()));
    return Json(value.get_str());
}

Json to_json(const LinkingMatrix& lk) {
    Json rows = Json::array();
    for (int p = 0; p < lk.size; ++p) {
        Json row = Json::array();
        for (int q = 0; q < lk.size; ++q) row.push_back(lk.at(p, q));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const LaurentPolynomial& p) {
    Json out;
    out["text"] = p.to_string();
    Json coeffs = Json::array();
    for (const auto& [exponent, c] : p.terms()) coeffs.push_back(Json::array({exponent, integer_json(c)}));
    out["terms"] = std::move(coeffs);
    return out;
}

Json to_json(const IntegerMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const InvariantReport& report) {
    Json out;
    out["schema"] = kInvariantsSchema;
    out["strand_count"] = report.strand_count;
    out["components"] = report.components.component_count;
    out["component_of_strand"] = report.components.component_of_strand;
    out["exponent_sum"] = report.exponent_sum;
    out["linking"] = to_json(report.linking);
    out["determinant"] = integer_json(report.determinant());
    out["determinant_paths"] = {{"seifert", integer_json(report.determinant_seifert)},
                                {"burau", integer_json(report.determinant_burau)}};
    Json alexander = to_json(report.alexander);
    Json values = Json::array();
    for (const auto& v : report.alexander_at) values.push_back({{"t", v.t}, {"value", integer_json(v.value)}});
    alexander["at"] = std::move(values);
    out["alexander"] = std::move(alexander);
    return out;
}

}  // namespace braidlink
