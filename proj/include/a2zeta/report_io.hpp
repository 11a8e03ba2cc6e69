#pragma once

// JSON emission for computed artifacts: polynomials, sparse operator
// matrices, and the full zeta report.  All writers use a fixed key order,
// exact decimal-string coefficients, and 2-space indentation so the same
// input always produces byte-identical output.  Trace tables are written as
// separate CSV files and referenced by name from the report.

#include <string>
#include <utility>

#include "a2zeta/loops.hpp"
#include "a2zeta/serialize.hpp"
#include "a2zeta/sparse_matrix.hpp"
#include "a2zeta/zeta.hpp"

namespace a2zeta {

inline detail::Json poly_to_json(const IntPoly& p) {
    detail::Json coeffs = detail::Json::array();
    const int top = p.degree() < 0 ? 0 : p.degree();
    for (int k = 0; k <= top; ++k) coeffs.push_back(p.coeff(k).str());
    return detail::Json{{"coeffs", std::move(coeffs)}};
}

inline detail::Json matrix_to_json(const SparseMat& m) {
    detail::Json entries = detail::Json::array();
    for (const auto& [idx, v] : m.entries())
        entries.push_back({idx.first, idx.second, v.str()});
    return detail::Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

namespace detail {

inline Json series_check_to_json(const SeriesCheck& s) {
    return Json{{"match", s.match},
                {"first_mismatch_order", s.first_mismatch_order},
                {"lhs_at_mismatch", s.lhs_at_mismatch},
                {"rhs_at_mismatch", s.rhs_at_mismatch}};
}

inline Json certificate_to_json(const PowerCertificate& p) {
    return Json{{"found", p.found},
                {"exponent", p.exponent},
                {"cofactor", poly_to_json(p.cofactor)},
                {"verified", p.verified},
                {"witness", poly_to_json(p.witness)},
                {"reason", p.reason}};
}

}  // namespace detail

inline detail::Json zeta_report_to_json(const ZetaReport& r) {
    detail::Json j;
    j["q"] = r.q;
    j["num_vertices"] = r.num_vertices;
    j["num_edges"] = r.num_edges;
    j["num_chambers"] = r.num_chambers;
    j["z1"] = {{"poly", poly_to_json(r.z1.z1)},
               {"observed_degree", r.z1.observed_degree},
               {"num_edges", r.z1.num_edges},
               {"claimed_degree", rat_to_string(r.z1.claimed_degree)},
               {"matches_num_edges", r.z1.matches_num_edges},
               {"matches_claimed", r.z1.matches_claimed},
               {"det_T_nonzero", r.z1.det_T_nonzero}};
    j["z2"] = {{"poly", poly_to_json(r.z2.z2)},
               {"observed_degree", r.z2.observed_degree},
               {"num_chambers", r.z2.num_chambers},
               {"within_degree_bound", r.z2.within_degree_bound},
               {"in_u_cubed", r.z2.in_u_cubed}};
    j["z"] = {{"num", poly_to_json(r.z.num)}, {"den", poly_to_json(r.z.den)}};
    j["d"] = poly_to_json(r.d);
    j["series"] = {{"order", r.series.order},
                   {"derivative_identity",
                    detail::series_check_to_json(r.series.derivative_identity)},
                   {"unsigned_variant",
                    detail::series_check_to_json(r.series.unsigned_variant)},
                   {"h_trace_identity",
                    detail::series_check_to_json(r.series.h_trace_identity)}};
    j["euler"] = {{"order", r.euler.order},
                  {"z1_check", detail::series_check_to_json(r.euler.z1_check)},
                  {"z_check", detail::series_check_to_json(r.euler.z_check)}};
    j["certificates"] = {{"z1_power", detail::certificate_to_json(r.z1_power)},
                         {"z_power", detail::certificate_to_json(r.z_power)}};
    detail::Json rows = detail::Json::array();
    for (const TraceRow& row : r.traces.rows) {
        rows.push_back({{"n", row.n},
                        {"geodesic_sum", row.geodesic_sum.str()},
                        {"trace_T", row.trace_T.str()},
                        {"gallery_sum", row.has_gallery ? rat_to_string(row.gallery_sum) : ""},
                        {"trace_L", row.has_gallery ? row.trace_L.str() : ""},
                        {"match", row.match}});
    }
    j["traces"] = {{"geodesic_all_match", r.traces.geodesic_all_match},
                   {"gallery_all_match", r.traces.gallery_all_match},
                   {"rows", std::move(rows)}};
    j["trace_csv_ref"] = r.trace_csv_ref;
    return j;
}

inline std::string json_to_string(const detail::Json& j) { return j.dump(2) + "\n"; }

inline void save_zeta_report(const ZetaReport& r, const std::string& path) {
    detail::write_file(path, zeta_report_to_json(r));
}

}  // namespace a2zeta
