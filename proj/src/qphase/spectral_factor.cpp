#include "qlat/qphase/spectral_factor.hpp"

#include "qlat/error.hpp"

#include <cmath>

namespace qlat::qphase {

std::string to_string(Bracket b) { return b == Bracket::Symmetric ? "symmetric" : "asymmetric"; }

double spectral_factor(double zeta, double q, Bracket convention) {
    if (!(q > 0))
        throw InvalidArgument("q must be positive");
    const double a = 2 * zeta - 0.5;
    const double h = std::log(q);
    if (h == 0)
        return 1;
    if (convention == Bracket::Symmetric) {
        if (a == 0)
            return h / std::sinh(h);
        return std::sinh(a * h) / std::sinh(h) / a;
    }
    if (a == 0)
        return h / std::expm1(h);
    return std::expm1(a * h) / std::expm1(h) / a;
}

} // namespace qlat::qphase
