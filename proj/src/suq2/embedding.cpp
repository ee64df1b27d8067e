#include "qlat/suq2/embedding.hpp"

#include "qlat/error.hpp"

#include <cmath>

namespace qlat::suq2 {

using num::max_abs;

EmbeddingReport from_su2_embedding(HalfInt j, double q) {
    if (!(q > 1))
        throw InvalidArgument("embedding requires q > 1");
    const Suq2Rep ref = build_rep(j, q);
    const Eigen::Index dim = ref.dim();
    const double lambda = q - 1 / q;
    const double jj = j.value();

    CMat j0 = CMat::Zero(dim, dim), jp = CMat::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        const double m = -jj + static_cast<double>(k);
        j0(k, k) = m;
        if (k + 1 < dim)
            jp(k + 1, k) = std::sqrt((jj - m) * (jj + m + 1) / 2);
    }

    EmbeddingReport out;
    Suq2Rep &rep = out.rep;
    rep.j = j;
    rep.q = q;
    rep.basis = ref.basis;
    rep.T3 = CMat::Zero(dim, dim);
    CMat f = CMat::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        const double m = j0(k, k).real();
        rep.T3(k, k) = (1 - std::pow(q, -4 * m)) / lambda;
        if (k > 0) {
            f(k, k) = ref.Tp(k, k - 1) / jp(k, k - 1);
            out.f.push_back(f(k, k).real());
        }
    }
    rep.Tp = f * jp;
    rep.Tm = q * q * rep.Tp.adjoint();
    rep.tau = CMat::Identity(dim, dim) - lambda * rep.T3;
    rep.tau_half = rep.tau.cwiseSqrt();

    out.t3_defect = max_abs(rep.T3 - ref.T3);
    out.tp_defect = max_abs(rep.Tp - ref.Tp);
    out.tm_defect = max_abs(rep.Tm - ref.Tm);
    out.residuals = algebra_residuals(rep);
    out.conjugation = conjugation_residuals(rep);
    return out;
}

} // namespace qlat::suq2
