#include "ckalg/json_io.hpp"

namespace ckalg {

using nlohmann::json;

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const OmegaVector& omega) {
    json out = json::array();
    for (const auto& c : omega.coeffs()) {
        out.push_back(to_json(c));
    }
    return out;
}

json to_json(const MatrixOverK& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            const auto& e = m(r, c);
            row.push_back(json::array({to_json(e.w()), to_json(e.x()), to_json(e.y()), to_json(e.z())}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json structure_to_json(const LieAlgebra& algebra) {
    json out = json::array();
    for (const auto& [key, lc] : algebra.constants()) {
        for (const auto& t : lc) {
            out.push_back({{"i", key.first}, {"j", key.second}, {"k", t.index}, {"c", to_json(t.coeff)}});
        }
    }
    return out;
}

json cochain_to_json(const TwoCochain& xi, const LieAlgebra& algebra) {
    json pairs = json::array();
    for (const auto& [key, value] : xi.entries()) {
        pairs.push_back({{"i", key.first},
                         {"j", key.second},
                         {"label_i", algebra.basis()[key.first].to_string()},
                         {"label_j", algebra.basis()[key.second].to_string()},
                         {"c", to_json(value)}});
    }
    return {{"pairs", std::move(pairs)}};
}

json to_json(const CohomologyResult& result, const LieAlgebra& algebra) {
    json reps = json::array();
    for (const auto& rep : result.h2_representatives) {
        reps.push_back(cochain_to_json(rep, algebra));
    }
    return {{"dim_z2", result.dim_z2},
            {"dim_b2", result.dim_b2},
            {"dim_h2", result.dim_h2},
            {"representatives", std::move(reps)}};
}

json to_json(const ExtensionCoefficientCatalog& catalog) {
    json entries = json::array();
    for (const auto& e : catalog.entries) {
        entries.push_back({{"name", e.name},
                           {"type", to_string(e.type)},
                           {"active", e.active},
                           {"constraint_note", e.constraint_note}});
    }
    return {{"family", to_string(catalog.family)},
            {"omega", to_json(catalog.omega)},
            {"predicted", catalog.count()},
            {"entries", std::move(entries)}};
}

json to_json(const CrosscheckReport& report) {
    json coefficients = json::array();
    for (const auto& v : report.verdicts) {
        coefficients.push_back({{"name", v.name},
                                {"type", to_string(v.type)},
                                {"active", v.active},
                                {"verdict", v.verdict},
                                {"ok", v.ok}});
    }
    return {{"predicted", report.predicted},
            {"solved", report.cohomology.dim_h2},
            {"coefficients", std::move(coefficients)},
            {"active_independent", report.active_independent},
            {"match", report.match}};
}

} // namespace ckalg
