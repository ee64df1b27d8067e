#pragma once

#include "qlat/classical/integrate.hpp"
#include "qlat/classical/trajectory.hpp"
#include "qlat/ncalg/flatness.hpp"
#include "qlat/qphase/reconstruct.hpp"
#include "qlat/qphase/spectrum.hpp"
#include "qlat/suq2/casimir.hpp"
#include "qlat/suq2/exact_spinor.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace qlat::cli {

using Json = nlohmann::ordered_json;

// Row-major [[re, im], ...] rows.
Json matrix_json(const num::CMat &m);

std::string format_number(double v);

struct RepSummary {
    suq2::AlgebraResiduals residuals;
    suq2::ConjugationResiduals conjugation;
    std::optional<suq2::CasimirCheck> casimir; // irreps with q > 1
    std::optional<double> casimir_commutator;  // max over [C, T]
    std::vector<suq2::DecompositionEntry> decomposition;
    std::optional<std::string> decomposition_error;
    std::optional<suq2::SpinorCheck> spinor; // j = 1/2
};

RepSummary summarize(const suq2::Suq2Rep &rep);

// { j, q, dims, residuals: {rel1, rel2, rel3, conj}, casimir: {eigenvalue, defect},
//   decomposition: [{j, multiplicity, copies, casimir_eigenvalue}] }
Json rep_json(const suq2::Suq2Rep &rep, const std::vector<int> &dims, const RepSummary &s,
              bool matrices);

Json flatness_json(const nc::FlatnessReport &r);

Json phase_params_json(const qphase::PhaseParams &p);
Json phase_residuals_json(const qphase::PhaseResiduals &r);
Json reconstruction_json(const qphase::Reconstruction &r);
Json spectrum_json(const qphase::SpectrumReport &s);

Json comparison_json(const classical::ComparisonReport &r, bool rows);
Json small_h_json(const classical::SmallHReport &r);
Json period_json(const classical::PeriodReport &r);

} // namespace qlat::cli
