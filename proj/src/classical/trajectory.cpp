#include "qlat/classical/trajectory.hpp"

#include "qlat/error.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <numbers>

namespace qlat::classical {

double x_closed_form(double t, double E, double h) {
    if (!(E > 0) || h < 0 || t < 0)
        throw InvalidArgument("x_closed_form needs E > 0, h >= 0, t >= 0");
    if (h == 0)
        return std::sqrt(2 * E) * t;
    // cosh h - cos(theta) without cancellation for small h and theta
    const double sh = std::sinh(h / 2), sn = std::sin(2 * E * t * h);
    const double radicand = 2 * sh * sh + 2 * sn * sn;
    return 2 * std::sqrt(E) * t / std::sinh(h) * std::sqrt(radicand / (1 + 16 * E * E * t * t));
}

SmallHReport small_h_limit_check(double E, const std::vector<double> &h_values,
                                 const std::vector<double> &t_grid) {
    SmallHReport r;
    r.h_values = h_values;
    for (double h : h_values) {
        double dev = 0;
        for (double t : t_grid)
            if (t > 0)
                dev = std::max(dev, std::abs(x_closed_form(t, E, h) / (std::sqrt(2 * E) * t) - 1));
        r.deviations.push_back(dev);
    }
    for (std::size_t k = 1; k < r.deviations.size(); ++k)
        r.ratios.push_back(r.deviations[k] / r.deviations[k - 1]);
    return r;
}

PeriodReport asymptotic_period_estimate(double E, double h, double t_min, double t_max,
                                        int min_maxima) {
    if (!(E > 0) || !(h > 0) || !(t_max > t_min) || t_min < 0)
        throw InvalidArgument("period estimate needs E > 0, h > 0, 0 <= t_min < t_max");
    PeriodReport r;
    r.expected = std::numbers::pi / (2 * E * h);
    const int samples = std::max(2000, static_cast<int>(64 * (t_max - t_min) / r.expected));
    const double dt = (t_max - t_min) / samples;
    auto x = [&](double t) { return x_closed_form(t, E, h); };
    for (int k = 1; k < samples; ++k) {
        const double t = t_min + k * dt;
        const double here = x(t);
        if (here > x(t - dt) && here >= x(t + dt)) {
            const auto best = boost::math::tools::brent_find_minima(
                [&](double s) { return -x(s); }, t - dt, t + dt, 52);
            r.maxima.push_back(best.first);
        }
    }
    if (static_cast<int>(r.maxima.size()) < min_maxima)
        throw InsufficientRange("found " + std::to_string(r.maxima.size()) + " maxima, need " +
                                std::to_string(min_maxima));
    r.mean_spacing = (r.maxima.back() - r.maxima.front()) / static_cast<double>(r.maxima.size() - 1);
    r.relative_error = std::abs(r.mean_spacing / r.expected - 1);
    return r;
}

} // namespace qlat::classical
