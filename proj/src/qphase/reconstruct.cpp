#include "qlat/qphase/reconstruct.hpp"

#include "qlat/error.hpp"

#include <cmath>

namespace qlat::qphase {

using num::Relation;

Reconstruction reconstruct_pxlambda(const PhaseRep &rep) {
    const double q = rep.params.q;
    const double sq = std::sqrt(q);
    const auto keep = rep.interior();
    const CMat id = CMat::Identity(rep.dim(), rep.dim());
    const cplx i(0, 1);

    Reconstruction r;
    r.Lambda = rep.U.adjoint() / sq;
    r.Lambda_inv = sq * rep.U;
    r.x = ((1 + q) / (2 * q)) * rep.X;
    const CMat a = id + rep.U / sq;
    for (Eigen::Index k = 0; k < a.rows(); ++k)
        if (a(k, k) == 0.0)
            throw NumericalFailure("singular solve for p");
    r.p = a.triangularView<Eigen::Upper>().solve(2 * rep.P);

    r.heisenberg = relative_residual(Relation().add(1, r.p, r.x).add(-q, r.x, r.p).add(i, id), keep);
    r.p_conj = relative_residual(Relation().add(1, r.p.adjoint()).add(-1 / q, r.Lambda_inv, r.p), keep);
    r.lambda_conj =
        relative_residual(Relation().add(1, r.Lambda.adjoint()).add(-1 / q, r.Lambda_inv), keep);
    r.lambda_x = relative_residual(Relation().add(1, r.Lambda, r.x).add(-q, r.x, r.Lambda), keep);
    r.lambda_p = relative_residual(Relation().add(1, r.Lambda, r.p).add(-1 / q, r.p, r.Lambda), keep);
    r.undeformed = absolute_residual(Relation().add(1, r.x, r.p).add(-1, r.p, r.x).add(-i, id), keep);
    return r;
}

} // namespace qlat::qphase
