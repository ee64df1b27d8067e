#pragma once

#include "qlat/numeric/residual.hpp"

#include <vector>

namespace qlat::qphase {

using num::CMat;
using num::cplx;

enum class Sectors { Plus, Minus, Both };

struct PhaseParams {
    double q = 1.5;
    int N = 40; // basis n = -N..N in each sector
    Sectors sectors = Sectors::Both;
    double s0 = 1; // eigenvalue of the central element, 1 <= s0 < q
    // Couple the two sectors of the doubled X at n = -N (see build_phase_rep).
    bool bridge_sectors = true;
};

struct BasisState {
    int n;
    int sigma; // +1 or -1
};

// Truncated representation of q^(1/2) XP - q^(-1/2) PX = iU, UX = q^-1 XU,
// UP = qPU on span{|n, sigma>}.
struct PhaseRep {
    PhaseParams params;
    std::vector<BasisState> basis; // plus sector first, n ascending
    CMat P, X, U;

    Eigen::Index dim() const { return P.rows(); }
    Eigen::Index index_of(int n, int sigma) const;
    // Indices with |n| <= N - 2, where no relation sees the truncation.
    std::vector<Eigen::Index> interior() const;
};

// P|n,s> = s s0 q^n |n,s>,  U|n,s> = |n-1,s>,
// X|n,s> = (s/s0)(i q^-n / lambda)(q^(1/2)|n-1,s> - q^(-1/2)|n+1,s>).
// With both sectors and bridge_sectors, the link the window cuts off below
// n = -N is replaced by <-N,-|X|-N,+> = i q^N / (lambda s0), which keeps X
// Hermitian on the doubled space and its spectrum on a ratio-q lattice.
// Throws InvalidArgument unless q > 1, N >= 2 and 1 <= s0 < q.
PhaseRep build_phase_rep(const PhaseParams &params);

struct PhaseResiduals {
    double heisenberg = 0; // q^(1/2) XP - q^(-1/2) PX - iU
    double ux = 0;         // UX - q^-1 XU
    double up = 0;         // UP - qPU
    double unitary = 0;    // U^dagger U - 1
    double p_hermitian = 0;
    double x_hermitian = 0;
    double max() const;
};

// Relative residuals (|defect| over the summed magnitudes of the terms) on the
// interior block; the Hermiticity defects are absolute over the full matrix.
// Requires N >= 3.
PhaseResiduals relation_residuals(const PhaseRep &rep);

} // namespace qlat::qphase
