#pragma once

#include <vector>

namespace qlat::classical {

// x(t) = 2 sqrt(E) t (1/sinh h) sqrt((cosh h - cos(4Eth)) / (1 + 16 E^2 t^2)),
// with the h = 0 limit sqrt(2E) t. Requires E > 0, h >= 0, t >= 0.
double x_closed_form(double t, double E, double h);

struct SmallHReport {
    std::vector<double> h_values;
    std::vector<double> deviations; // max over t of |x / (sqrt(2E) t) - 1|
    std::vector<double> ratios;     // deviations[k+1] / deviations[k]
};

// t_grid entries with t == 0 are skipped.
SmallHReport small_h_limit_check(double E, const std::vector<double> &h_values,
                                 const std::vector<double> &t_grid);

struct PeriodReport {
    std::vector<double> maxima; // times of the local maxima of x(t)
    double mean_spacing = 0;
    double expected = 0;       // pi / (2 E h)
    double relative_error = 0; // |mean_spacing / expected - 1|
};

// Locates the maxima of x(t) on [t_min, t_max] (grid scan, then Brent
// refinement). Throws InsufficientRange with fewer than `min_maxima` maxima.
PeriodReport asymptotic_period_estimate(double E, double h, double t_min, double t_max,
                                        int min_maxima = 10);

} // namespace qlat::classical
