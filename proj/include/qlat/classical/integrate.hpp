#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qlat::classical {

struct IntegratedTrajectory {
    std::vector<double> t, x, p;
    std::vector<double> energy_drift; // |H - E| / E
    double max_drift = 0;
    std::string stepper;
};

// Integrates x' = dH/dp, p' = -dH/dx from x(0) = 0, p(0) = initial_momentum,
// q = e^h, with an adaptive Dormand-Prince 5(4) stepper at absolute and
// relative tolerance `tol`. If the energy drift exceeds 10 tol, the run is
// repeated with Runge-Kutta-Fehlberg 7(8). Step-size collapse throws
// IntegrationFailure carrying the last accepted state. t_grid must be
// ascending and start at 0.
IntegratedTrajectory integrate_hamilton(double E, double h, const std::vector<double> &t_grid,
                                        double tol = 1e-9);

struct ComparisonRow {
    double t, x_closed, x_integrated, rel_dev, energy_drift;
};

struct ComparisonReport {
    double E = 0, h = 0, tol = 0;
    std::vector<ComparisonRow> rows;
    double max_rel_dev = 0;
    double max_drift = 0;
    std::string stepper;
    // Initial slope: closed form sqrt(2E)/cosh(h/2), its rewriting
    // 2 sqrt(2E) sqrt(q)/(q+1), and dH/dp at (0, p0).
    double slope_closed = 0, slope_rewritten = 0, slope_hamilton = 0;
};

// rel_dev = |x_closed - x_integrated| / max(|x_closed|, sqrt(2E) t), 0 at t = 0.
ComparisonReport compare_closed_vs_integrated(double E, double h, const std::vector<double> &t_grid,
                                              double tol = 1e-9);

// CSV with header t,x_closed,x_integrated,rel_dev,energy_drift and 12
// significant digits.
void write_csv(std::ostream &out, const ComparisonReport &report);

// n + 1 evenly spaced points on [a, b].
std::vector<double> linspace(double a, double b, int n);

} // namespace qlat::classical
