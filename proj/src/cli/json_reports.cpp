#include "qlat/cli/json_reports.hpp"

#include "qlat/error.hpp"

#include <algorithm>
#include <cstdio>

namespace qlat::cli {

Json matrix_json(const num::CMat &m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0 ? 0.0 : v);
    return buf;
}

RepSummary summarize(const suq2::Suq2Rep &rep) {
    RepSummary s;
    s.residuals = suq2::algebra_residuals(rep);
    s.conjugation = suq2::conjugation_residuals(rep);
    if (rep.q > 1) {
        if (rep.j) {
            s.casimir = suq2::check_casimir(rep);
            s.casimir_commutator =
                std::max({s.casimir->comm_tp, s.casimir->comm_tm, s.casimir->comm_t3});
        } else {
            const num::CMat c = suq2::casimir_matrix(rep);
            s.casimir_commutator = std::max({num::max_abs(c * rep.Tp - rep.Tp * c),
                                             num::max_abs(c * rep.Tm - rep.Tm * c),
                                             num::max_abs(c * rep.T3 - rep.T3 * c)});
        }
        try {
            s.decomposition = suq2::casimir_decompose(rep);
        } catch (const DecompositionFailure &e) {
            s.decomposition_error = e.what();
        }
    }
    if (rep.j && *rep.j == HalfInt::from_twice(1))
        s.spinor = suq2::check_spinor();
    return s;
}

Json rep_json(const suq2::Suq2Rep &rep, const std::vector<int> &dims, const RepSummary &s,
              bool matrices) {
    Json j;
    if (rep.j)
        j["j"] = rep.j->value();
    else
        j["j"] = nullptr;
    j["q"] = rep.q;
    j["dims"] = dims;
    j["residuals"] = {{"rel1", s.residuals.rel1},
                      {"rel2", s.residuals.rel2},
                      {"rel3", s.residuals.rel3},
                      {"conj", s.conjugation.max()}};
    if (s.casimir)
        j["casimir"] = {{"eigenvalue", s.casimir->eigenvalue},
                        {"defect", s.casimir->defect},
                        {"commutator", *s.casimir_commutator}};
    else if (s.casimir_commutator)
        j["casimir"] = {{"commutator", *s.casimir_commutator}};
    else
        j["casimir"] = nullptr;
    Json dec = Json::array();
    for (const auto &e : s.decomposition)
        dec.push_back({{"j", e.j.value()},
                       {"multiplicity", e.multiplicity},
                       {"copies", e.copies},
                       {"casimir_eigenvalue", e.casimir_eigenvalue}});
    j["decomposition"] = dec;
    if (s.decomposition_error)
        j["decomposition_error"] = *s.decomposition_error;
    if (s.spinor)
        j["spinor"] = {{"exact", s.spinor->relations_exact()},
                       {"printed_rel2_holds", s.spinor->rel2_printed.is_zero()},
                       {"dagger_rel2_is_rel3", s.spinor->dagger_rel2_is_rel3},
                       {"table_mismatches", s.spinor->table_mismatches}};
    if (matrices)
        j["matrices"] = {{"T3", matrix_json(rep.T3)},
                         {"Tp", matrix_json(rep.Tp)},
                         {"Tm", matrix_json(rep.Tm)},
                         {"tau", matrix_json(rep.tau)}};
    return j;
}

Json flatness_json(const nc::FlatnessReport &r) {
    Json j;
    j["presentation"] = r.presentation;
    j["max_degree"] = r.max_degree;
    j["certification"] = r.certification;
    j["flat"] = r.flat();
    Json degrees = Json::array();
    for (const auto &d : r.degrees) {
        Json rels = Json::array();
        for (const auto &p : d.relations)
            rels.push_back(p.to_string());
        degrees.push_back({{"degree", d.degree},
                           {"normal_monomials", d.normal_monomials},
                           {"independent", d.independent},
                           {"relations", rels},
                           {"confluence", nc::to_string(d.confluence)}});
    }
    j["degrees"] = degrees;
    return j;
}

Json phase_params_json(const qphase::PhaseParams &p) {
    const char *sectors = p.sectors == qphase::Sectors::Both   ? "both"
                          : p.sectors == qphase::Sectors::Plus ? "plus"
                                                               : "minus";
    return {{"q", p.q}, {"N", p.N}, {"s0", p.s0}, {"sectors", sectors},
            {"bridge", p.sectors == qphase::Sectors::Both && p.bridge_sectors}};
}

Json phase_residuals_json(const qphase::PhaseResiduals &r) {
    return {{"heisenberg", r.heisenberg}, {"ux", r.ux},
            {"up", r.up},                 {"unitary", r.unitary},
            {"p_hermitian", r.p_hermitian}, {"x_hermitian", r.x_hermitian}};
}

Json reconstruction_json(const qphase::Reconstruction &r) {
    return {{"heisenberg", r.heisenberg}, {"p_conj", r.p_conj},     {"lambda_conj", r.lambda_conj},
            {"lambda_x", r.lambda_x},     {"lambda_p", r.lambda_p}, {"undeformed", r.undeformed}};
}

Json spectrum_json(const qphase::SpectrumReport &s) {
    return {{"eigenvalues", s.eigenvalues},
            {"window", {s.window_begin, s.window_end}},
            {"ratios", s.ratios},
            {"ratio_dev_max", s.ratio_dev_max},
            {"grid_scale", s.grid_scale},
            {"pair_defect", s.pair_defect},
            {"unitarity", s.unitarity},
            {"reconstruction", s.reconstruction}};
}

Json comparison_json(const classical::ComparisonReport &r, bool rows) {
    Json j = {{"E", r.E},
              {"h", r.h},
              {"tol", r.tol},
              {"stepper", r.stepper},
              {"max_rel_dev", r.max_rel_dev},
              {"max_energy_drift", r.max_drift},
              {"slope", {{"closed", r.slope_closed},
                         {"rewritten", r.slope_rewritten},
                         {"hamilton", r.slope_hamilton}}}};
    if (rows) {
        Json list = Json::array();
        for (const auto &row : r.rows)
            list.push_back({{"t", row.t},
                            {"x_closed", row.x_closed},
                            {"x_integrated", row.x_integrated},
                            {"rel_dev", row.rel_dev},
                            {"energy_drift", row.energy_drift}});
        j["rows"] = list;
    }
    return j;
}

Json small_h_json(const classical::SmallHReport &r) {
    return {{"h", r.h_values}, {"deviation", r.deviations}, {"ratios", r.ratios}};
}

Json period_json(const classical::PeriodReport &r) {
    return {{"maxima", r.maxima},
            {"mean_spacing", r.mean_spacing},
            {"expected", r.expected},
            {"relative_error", r.relative_error}};
}

} // namespace qlat::cli
