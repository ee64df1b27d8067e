#include "qlat/suq2/rep.hpp"

#include "qlat/error.hpp"
#include "qlat/exact/qnumber.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace qlat::suq2 {

using num::max_abs;

Suq2Rep build_rep(HalfInt j, double q) {
    if (j.twice() < 0)
        throw InvalidArgument("j must be nonnegative");
    if (!(q >= 1))
        throw InvalidArgument("q must be >= 1");
    const int dim = j.twice() + 1;
    const double jj = j.value();
    const double lambda = q - 1 / q;
    Suq2Rep rep;
    rep.j = j;
    rep.q = q;
    rep.T3 = CMat::Zero(dim, dim);
    rep.Tp = CMat::Zero(dim, dim);
    rep.Tm = CMat::Zero(dim, dim);
    rep.tau = CMat::Zero(dim, dim);
    rep.tau_half = CMat::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        const HalfInt m = HalfInt::from_twice(-j.twice() + 2 * k);
        const double mm = m.value();
        rep.basis.push_back({m});
        const double t3 = q_number_value(2 * mm, -2, q) / q;
        rep.T3(k, k) = t3;
        const double tau = 1 - lambda * t3;
        assert(tau > 0);
        rep.tau(k, k) = tau;
        rep.tau_half(k, k) = std::sqrt(tau);
        if (k + 1 < dim) {
            const double r = q_number_value(jj + mm + 1, -2, q) * q_number_value(jj - mm, 2, q);
            assert(r >= 0);
            rep.Tp(k + 1, k) = std::sqrt(r) / q;
        }
        if (k > 0) {
            const double r = q_number_value(jj + mm, -2, q) * q_number_value(jj - mm + 1, 2, q);
            assert(r >= 0);
            rep.Tm(k - 1, k) = q * std::sqrt(r);
        }
    }
    return rep;
}

double AlgebraResiduals::max() const { return std::max({rel1, rel2, rel3}); }

AlgebraResiduals algebra_residuals(const Suq2Rep &rep) {
    const double q = rep.q;
    const CMat &T3 = rep.T3, &Tp = rep.Tp, &Tm = rep.Tm;
    AlgebraResiduals r;
    r.rel1 = max_abs(Tp * Tm / q - q * Tm * Tp - T3);
    r.rel2 = max_abs(q * q * T3 * Tp - Tp * T3 / (q * q) - (q + 1 / q) * Tp);
    r.rel3 = max_abs(T3 * Tm / (q * q) - q * q * Tm * T3 + (q + 1 / q) * Tm);
    return r;
}

double ConjugationResiduals::max() const { return std::max(t3, tp); }

ConjugationResiduals conjugation_residuals(const Suq2Rep &rep) {
    ConjugationResiduals r;
    r.t3 = max_abs(rep.T3.adjoint() - rep.T3);
    r.tp = max_abs(rep.Tp.adjoint() - rep.Tm / (rep.q * rep.q));
    return r;
}

} // namespace qlat::suq2
