#include "qlat/classical/integrate.hpp"

#include "qlat/classical/hamiltonian.hpp"
#include "qlat/classical/trajectory.hpp"
#include "qlat/error.hpp"

#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <cstdio>

namespace qlat::classical {

namespace odeint = boost::numeric::odeint;
using State = std::array<double, 2>;

namespace {

struct Observer {
    IntegratedTrajectory *out;
    double E, q;
    void operator()(const State &s, double t) const {
        out->t.push_back(t);
        out->x.push_back(s[0]);
        out->p.push_back(s[1]);
        const double drift = std::abs(h_classical(s[0], s[1], q) - E) / E;
        out->energy_drift.push_back(drift);
        out->max_drift = std::max(out->max_drift, drift);
    }
};

template <class Stepper>
IntegratedTrajectory run(Stepper stepper, const char *name, double E, double q,
                         const std::vector<double> &t_grid) {
    IntegratedTrajectory out;
    out.stepper = name;
    State s{0, initial_momentum(E, q)};
    auto rhs = [q](const State &y, State &dy, double) {
        const auto d = h_classical_partials(y[0], y[1], q);
        dy[0] = d.dp;
        dy[1] = -d.dx;
    };
    try {
        odeint::integrate_times(stepper, rhs, s, t_grid.begin(), t_grid.end(), 1e-3,
                                Observer{&out, E, q}, odeint::max_step_checker(1'000'000));
    } catch (const odeint::step_adjustment_error &e) {
        const double t = out.t.empty() ? 0 : out.t.back();
        throw IntegrationFailure(e.what(), t, out.x.empty() ? 0 : out.x.back(),
                                 out.p.empty() ? s[1] : out.p.back());
    } catch (const odeint::no_progress_error &e) {
        const double t = out.t.empty() ? 0 : out.t.back();
        throw IntegrationFailure(e.what(), t, out.x.empty() ? 0 : out.x.back(),
                                 out.p.empty() ? s[1] : out.p.back());
    }
    return out;
}

} // namespace

IntegratedTrajectory integrate_hamilton(double E, double h, const std::vector<double> &t_grid,
                                        double tol) {
    if (!(E > 0) || h < 0 || !(tol > 0))
        throw InvalidArgument("integration needs E > 0, h >= 0, tol > 0");
    if (t_grid.empty() || t_grid.front() != 0 || !std::is_sorted(t_grid.begin(), t_grid.end()))
        throw InvalidArgument("t_grid must be ascending and start at 0");
    const double q = std::exp(h);
    auto out = run(odeint::make_dense_output(tol, tol, odeint::runge_kutta_dopri5<State>()),
                   "dopri5", E, q, t_grid);
    if (out.max_drift > 10 * tol)
        out = run(odeint::make_controlled(tol, tol, odeint::runge_kutta_fehlberg78<State>()),
                  "fehlberg78", E, q, t_grid);
    return out;
}

ComparisonReport compare_closed_vs_integrated(double E, double h, const std::vector<double> &t_grid,
                                              double tol) {
    const auto num = integrate_hamilton(E, h, t_grid, tol);
    const double q = std::exp(h);
    ComparisonReport r;
    r.E = E;
    r.h = h;
    r.tol = tol;
    r.stepper = num.stepper;
    r.max_drift = num.max_drift;
    for (std::size_t k = 0; k < num.t.size(); ++k) {
        const double t = num.t[k];
        const double xc = x_closed_form(t, E, h);
        const double scale = std::max(std::abs(xc), std::sqrt(2 * E) * t);
        const double dev = scale > 0 ? std::abs(xc - num.x[k]) / scale : 0.0;
        r.rows.push_back({t, xc, num.x[k], dev, num.energy_drift[k]});
        r.max_rel_dev = std::max(r.max_rel_dev, dev);
    }
    r.slope_closed = std::sqrt(2 * E) / std::cosh(h / 2);
    r.slope_rewritten = 2 * std::sqrt(2 * E) * std::sqrt(q) / (q + 1);
    r.slope_hamilton = h_classical_partials(0, initial_momentum(E, q), q).dp;
    return r;
}

void write_csv(std::ostream &out, const ComparisonReport &report) {
    out << "t,x_closed,x_integrated,rel_dev,energy_drift\n";
    char line[160];
    for (const auto &row : report.rows) {
        std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g,%.12g,%.12g\n", row.t, row.x_closed,
                      row.x_integrated, row.rel_dev, row.energy_drift);
        out << line;
    }
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> out;
    for (int k = 0; k <= n; ++k)
        out.push_back(k == n ? b : a + (b - a) * k / n);
    return out;
}

} // namespace qlat::classical
