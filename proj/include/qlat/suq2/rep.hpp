#pragma once

#include "qlat/exact/half_int.hpp"
#include "qlat/numeric/residual.hpp"

#include <optional>
#include <vector>

namespace qlat::suq2 {

using num::CMat;

// Matrices of T3, T+, T-, tau on a finite-dimensional representation.
//
// Irreducible representations carry `j` and the basis m = -j..j in ascending
// order. Tensor products have no single j; each basis vector then lists the m
// of every factor.
struct Suq2Rep {
    std::optional<HalfInt> j;
    double q = 1;
    std::vector<std::vector<HalfInt>> basis;
    CMat T3, Tp, Tm, tau, tau_half;

    Eigen::Index dim() const { return T3.rows(); }
};

// Spin-j irrep: T3|m> = (1/q)[2m]_{-2}, T+|m> = (1/q) sqrt([j+m+1]_{-2}[j-m]_2) |m+1>,
// T-|m> = q sqrt([j+m]_{-2}[j-m+1]_2) |m-1>, tau = 1 - lambda T3.
// Requires 2j >= 0 and q >= 1.
Suq2Rep build_rep(HalfInt j, double q);

struct AlgebraResiduals {
    double rel1 = 0; // (1/q)T+T- - qT-T+ - T3
    double rel2 = 0; // q^2 T3T+ - q^-2 T+T3 - (q + 1/q)T+
    double rel3 = 0; // q^-2 T3T- - q^2 T-T3 + (q + 1/q)T-
    double max() const;
};

// Max-norms of the defining relations.
AlgebraResiduals algebra_residuals(const Suq2Rep &rep);

struct ConjugationResiduals {
    double t3 = 0; // T3^dagger - T3
    double tp = 0; // T+^dagger - q^-2 T-
    double max() const;
};

ConjugationResiduals conjugation_residuals(const Suq2Rep &rep);

} // namespace qlat::suq2
