#include "qlat/qphase/spectrum.hpp"

#include "qlat/error.hpp"
#include "qlat/numeric/chain_eigen.hpp"

#include <algorithm>
#include <cmath>

namespace qlat::qphase {

XEigensystem x_eigensystem(const PhaseRep &rep) {
    if (rep.params.sectors != Sectors::Both)
        throw InvalidArgument("the spectrum is defined for the doubled X (sectors = both)");
    const double q = rep.params.q;
    XEigensystem out;
    SpectrumReport &s = out.report;
    s.eigenvalues = num::chain_eigenvalues(rep.X);

    Eigen::SelfAdjointEigenSolver<CMat> solver(rep.X);
    if (solver.info() != Eigen::Success)
        throw NumericalFailure("Hermitian eigensolver failed");
    out.eigenvectors = solver.eigenvectors();
    const Eigen::Index n = rep.dim();
    s.unitarity = num::max_abs(out.eigenvectors.adjoint() * out.eigenvectors -
                               CMat::Identity(n, n));
    const CMat back = out.eigenvectors * solver.eigenvalues().cast<cplx>().asDiagonal() *
                      out.eigenvectors.adjoint();
    s.reconstruction = num::max_abs(back - rep.X) / num::max_abs(rep.X);

    const double top = std::max(std::abs(s.eigenvalues.front()), std::abs(s.eigenvalues.back()));
    for (std::size_t k = 0; k < s.eigenvalues.size(); ++k)
        s.pair_defect = std::max(
            s.pair_defect, std::abs(s.eigenvalues[k] + s.eigenvalues[s.eigenvalues.size() - 1 - k]) / top);

    for (double v : s.eigenvalues)
        if (v > 0)
            s.positive.push_back(v);
    const std::size_t m = s.positive.size();
    s.window_begin = m / 4;
    s.window_end = m - m / 4;
    double log_scale = 0;
    for (std::size_t k = s.window_begin; k < s.window_end; ++k) {
        const double e = std::log(s.positive[k]) / std::log(q);
        log_scale += (e - std::round(e)) * std::log(q);
        if (k + 1 < s.window_end) {
            const double r = s.positive[k + 1] / s.positive[k];
            s.ratios.push_back(r);
            s.ratio_dev_max = std::max(s.ratio_dev_max, std::abs(r - q));
        }
    }
    if (s.window_end > s.window_begin)
        s.grid_scale = std::exp(log_scale / static_cast<double>(s.window_end - s.window_begin));
    return out;
}

} // namespace qlat::qphase
