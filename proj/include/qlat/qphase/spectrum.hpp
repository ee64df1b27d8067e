#pragma once

#include "qlat/qphase/phase_rep.hpp"

#include <cstddef>
#include <vector>

namespace qlat::qphase {

struct SpectrumReport {
    std::vector<double> eigenvalues; // ascending
    std::vector<double> positive;    // ascending
    std::size_t window_begin = 0;    // interior window [begin, end) of `positive`
    std::size_t window_end = 0;
    std::vector<double> ratios; // positive[k+1] / positive[k] inside the window
    double ratio_dev_max = 0;   // max |ratio - q|
    double grid_scale = 0;      // c in X ~ c q^n on the window (geometric mean)
    double pair_defect = 0;     // max |lambda_k + lambda_(n-1-k)|, relative
    double unitarity = 0;       // max |V^dagger V - 1|
    double reconstruction = 0;  // max |V D V^dagger - X| / max |X|
};

struct XEigensystem {
    SpectrumReport report;
    CMat eigenvectors; // columns, ordered like report.eigenvalues
};

// Diagonalizes the doubled X. Eigenvalues come from Sturm bisection on the
// coupling chain (accurate for the small ones); the eigenvector matrix, a
// sampled q-Fourier kernel, from a dense Hermitian solver. The window drops a
// quarter of the positive eigenvalues at each end. Requires Sectors::Both.
XEigensystem x_eigensystem(const PhaseRep &rep);

} // namespace qlat::qphase
