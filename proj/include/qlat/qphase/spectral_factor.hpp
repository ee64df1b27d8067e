#pragma once

#include <string>

namespace qlat::qphase {

enum class Bracket {
    Symmetric, // [A] = (q^A - q^-A) / (q - q^-1)
    Asymmetric // [A] = (q^A - 1) / (q - 1)
};

std::string to_string(Bracket b);

// [A] / A with A = 2 zeta - 1/2: the factor relating P to the canonical
// momentum on the eigenspace of z with eigenvalue zeta. At zeta = 1/4 the
// removable singularity is replaced by its limit (h / sinh h, resp.
// h / (q - 1), with q = e^h). Equals 1 at q = 1. Requires q > 0.
double spectral_factor(double zeta, double q, Bracket convention = Bracket::Symmetric);

} // namespace qlat::qphase
