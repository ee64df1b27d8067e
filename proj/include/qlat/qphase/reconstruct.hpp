#pragma once

#include "qlat/qphase/phase_rep.hpp"

namespace qlat::qphase {

// x, p and the scaling operator on the representation:
//   Lambda = q^(-1/2) U^dagger,  Lambda^-1 = q^(1/2) U (on the interior),
//   x = ((1 + q)/(2q)) X,  p from P = (1/2)(1 + q^-1 Lambda^-1) p.
struct Reconstruction {
    CMat x, p, Lambda, Lambda_inv;
    double heisenberg = 0;  // px - qxp + i
    double p_conj = 0;      // p^dagger - q^-1 Lambda^-1 p
    double lambda_conj = 0; // Lambda^dagger - q^-1 Lambda^-1
    double lambda_x = 0;    // Lambda x - q x Lambda
    double lambda_p = 0;    // Lambda p - q^-1 p Lambda
    double undeformed = 0;  // max |xp - px - i| on the interior, absolute
};

// Residuals are relative, on the interior block. Throws NumericalFailure if
// the triangular solve for p is singular.
Reconstruction reconstruct_pxlambda(const PhaseRep &rep);

} // namespace qlat::qphase
