#pragma once

namespace qlat::classical {

// H = (2/lambda^2) p^2 (q + 1/q - 2 cos(2xp h)) / (1 + 4x^2p^2), h = ln q,
// the classical reading of the operator Hamiltonian. At q == 1 it is p^2/2.
double h_classical(double x, double p, double q);

struct HamiltonianPartials {
    double dx = 0, dp = 0;
};

HamiltonianPartials h_classical_partials(double x, double p, double q);

// Momentum with H(0, p0) = E on the positive branch: (q + 1) sqrt(E / (2q)).
double initial_momentum(double E, double q);

} // namespace qlat::classical
