#include "qlat/qphase/phase_rep.hpp"

#include "qlat/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace qlat::qphase {

using num::Relation;

Eigen::Index PhaseRep::index_of(int n, int sigma) const {
    const int N = params.N;
    if (std::abs(n) > N)
        throw InvalidArgument("n outside the window");
    const Eigen::Index offset = n + N;
    switch (params.sectors) {
    case Sectors::Plus:
        if (sigma != 1)
            break;
        return offset;
    case Sectors::Minus:
        if (sigma != -1)
            break;
        return offset;
    case Sectors::Both:
        return sigma == 1 ? offset : offset + 2 * N + 1;
    }
    throw InvalidArgument("sector not present");
}

std::vector<Eigen::Index> PhaseRep::interior() const {
    std::vector<Eigen::Index> out;
    for (Eigen::Index k = 0; k < dim(); ++k)
        if (std::abs(basis[k].n) <= params.N - 2)
            out.push_back(k);
    return out;
}

PhaseRep build_phase_rep(const PhaseParams &params) {
    const double q = params.q, s0 = params.s0;
    if (!(q > 1))
        throw InvalidArgument("q must be > 1");
    if (params.N < 2)
        throw InvalidArgument("N must be >= 2");
    if (!(s0 >= 1 && s0 < q))
        throw InvalidArgument("s0 must lie in [1, q)");
    const int N = params.N;
    const double lambda = q - 1 / q;
    const cplx i(0, 1);

    PhaseRep rep;
    rep.params = params;
    std::vector<int> sigmas;
    if (params.sectors != Sectors::Minus)
        sigmas.push_back(1);
    if (params.sectors != Sectors::Plus)
        sigmas.push_back(-1);
    for (int s : sigmas)
        for (int n = -N; n <= N; ++n)
            rep.basis.push_back({n, s});

    const Eigen::Index dim = static_cast<Eigen::Index>(rep.basis.size());
    rep.P = CMat::Zero(dim, dim);
    rep.X = CMat::Zero(dim, dim);
    rep.U = CMat::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        const auto [n, s] = rep.basis[k];
        rep.P(k, k) = s * s0 * std::pow(q, n);
        if (n > -N) {
            rep.U(k - 1, k) = 1;
            rep.X(k - 1, k) = (s / s0) * i * std::pow(q, -n + 0.5) / lambda;
        }
        if (n < N)
            rep.X(k + 1, k) = -(s / s0) * i * std::pow(q, -n - 0.5) / lambda;
    }
    if (params.sectors == Sectors::Both && params.bridge_sectors) {
        const Eigen::Index plus = rep.index_of(-N, 1), minus = rep.index_of(-N, -1);
        const cplx link = i * std::pow(q, N) / (lambda * s0);
        rep.X(minus, plus) = link;
        rep.X(plus, minus) = std::conj(link);
    }
    return rep;
}

double PhaseResiduals::max() const {
    return std::max({heisenberg, ux, up, unitary, p_hermitian, x_hermitian});
}

PhaseResiduals relation_residuals(const PhaseRep &rep) {
    if (rep.params.N < 3)
        throw InvalidArgument("relation residuals need N >= 3");
    const double q = rep.params.q;
    const auto keep = rep.interior();
    const CMat &P = rep.P, &X = rep.X, &U = rep.U;
    const CMat id = CMat::Identity(rep.dim(), rep.dim());
    PhaseResiduals r;
    r.heisenberg = relative_residual(
        Relation().add(std::sqrt(q), X, P).add(-1 / std::sqrt(q), P, X).add(cplx(0, -1), U), keep);
    r.ux = relative_residual(Relation().add(1, U, X).add(-1 / q, X, U), keep);
    r.up = relative_residual(Relation().add(1, U, P).add(-q, P, U), keep);
    r.unitary = relative_residual(Relation().add(1, U.adjoint(), U).add(-1, id), keep);
    r.p_hermitian = num::max_abs(P - P.adjoint());
    r.x_hermitian = num::max_abs(X - X.adjoint());
    return r;
}

} // namespace qlat::qphase
