#pragma once

#include "qlat/qphase/phase_rep.hpp"

#include <vector>

namespace qlat::qphase {

using CVec = Eigen::VectorXcd;

// Diagonal of H = P^2 / 2 in basis order: s0^2 q^(2n) / 2 for every |n, sigma>.
std::vector<double> hamiltonian_spectrum(const PhaseRep &rep);

// exp(-iHt) state. Throws InvalidArgument on a dimension mismatch.
CVec evolve(const CVec &state, const PhaseRep &rep, double t);

} // namespace qlat::qphase
