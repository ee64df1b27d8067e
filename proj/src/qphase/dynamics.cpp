#include "qlat/qphase/dynamics.hpp"

#include "qlat/error.hpp"

#include <cmath>

namespace qlat::qphase {

std::vector<double> hamiltonian_spectrum(const PhaseRep &rep) {
    std::vector<double> out;
    for (Eigen::Index k = 0; k < rep.dim(); ++k)
        out.push_back(0.5 * std::norm(rep.P(k, k)));
    return out;
}

CVec evolve(const CVec &state, const PhaseRep &rep, double t) {
    if (state.size() != rep.dim())
        throw InvalidArgument("state dimension " + std::to_string(state.size()) +
                              " does not match representation dimension " +
                              std::to_string(rep.dim()));
    const auto energy = hamiltonian_spectrum(rep);
    CVec out(state.size());
    for (Eigen::Index k = 0; k < state.size(); ++k)
        out(k) = std::polar(1.0, -energy[k] * t) * state(k);
    return out;
}

} // namespace qlat::qphase
