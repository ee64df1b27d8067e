#pragma once

#include "qlat/suq2/rep.hpp"

#include <vector>

namespace qlat::suq2 {

// sU_q(2) generators as functions of the classical spin-j operators with
// [j+, j-] = j0, [j0, j+-] = +-j+-:
//   T3 = (1/lambda)(1 - q^(-4 j0)),  T+ = f(j0) j+,  T- = q^2 T+^dagger.
// f is read off from build_rep entry by entry, so only T3, T- and the
// relations are independent checks.
struct EmbeddingReport {
    Suq2Rep rep;
    std::vector<double> f; // f at j0 = m for m = -j+1 .. j
    double t3_defect = 0;  // max-norm against build_rep
    double tp_defect = 0;
    double tm_defect = 0;
    AlgebraResiduals residuals;
    ConjugationResiduals conjugation;
};

// Requires q > 1.
EmbeddingReport from_su2_embedding(HalfInt j, double q);

} // namespace qlat::suq2
