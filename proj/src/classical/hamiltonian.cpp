#include "qlat/classical/hamiltonian.hpp"

#include "qlat/error.hpp"

#include <cmath>

namespace qlat::classical {

namespace {

// N(u) = q + 1/q - 2 cos(2uh) = (sqrt(q) - 1/sqrt(q))^2 + 4 sin^2(uh)
struct Parts {
    double c, n, dn, d, dd; // 2/lambda^2, N, N', D = 1 + 4u^2, D'
};

Parts parts(double u, double q) {
    const double h = std::log(q);
    const double lambda = q - 1 / q;
    const double a = std::sqrt(q) - 1 / std::sqrt(q);
    const double s = std::sin(u * h);
    Parts p;
    p.c = 2 / (lambda * lambda);
    p.n = a * a + 4 * s * s;
    p.dn = 4 * h * std::sin(2 * u * h);
    p.d = 1 + 4 * u * u;
    p.dd = 8 * u;
    return p;
}

} // namespace

double h_classical(double x, double p, double q) {
    if (!(q > 0))
        throw InvalidArgument("q must be positive");
    if (q == 1)
        return p * p / 2;
    const Parts k = parts(x * p, q);
    return k.c * p * p * k.n / k.d;
}

HamiltonianPartials h_classical_partials(double x, double p, double q) {
    if (!(q > 0))
        throw InvalidArgument("q must be positive");
    if (q == 1)
        return {0, p};
    const Parts k = parts(x * p, q);
    const double g = k.n / k.d;
    const double dg = (k.dn * k.d - k.n * k.dd) / (k.d * k.d);
    return {k.c * p * p * dg * p, k.c * (2 * p * g + p * p * dg * x)};
}

double initial_momentum(double E, double q) { return (q + 1) * std::sqrt(E / (2 * q)); }

} // namespace qlat::classical
