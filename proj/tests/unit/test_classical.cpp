#include "doctest.h"

#include "qlat/classical/hamiltonian.hpp"
#include "qlat/classical/integrate.hpp"
#include "qlat/classical/trajectory.hpp"
#include "qlat/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

using namespace qlat;
using namespace qlat::classical;

TEST_CASE("closed form") {
    CHECK(x_closed_form(0, 1, 0.1) == 0.0);
    CHECK(x_closed_form(3, 2, 0) == doctest::Approx(6.0));
    const double h = 0.3, t = 1e-4;
    CHECK(x_closed_form(t, 1, h) / t == doctest::Approx(std::sqrt(2.0) / std::cosh(h / 2)).epsilon(1e-7));
    for (double t2 : {0.5, 3.0, 40.0})
        CHECK(x_closed_form(t2, 2.5, 0.2) ==
              doctest::Approx(x_closed_form(2.5 * t2, 1, 0.2) / std::sqrt(2.5)).epsilon(1e-13));
    CHECK_THROWS_AS(x_closed_form(-1, 1, 0.1), InvalidArgument);
}

TEST_CASE("small h limit scales as h^2") {
    const auto grid = linspace(0, 10, 2000);
    const auto r = small_h_limit_check(1, {1e-3, 5e-4, 2.5e-4, 1e-4}, grid);
    CHECK(r.deviations[3] <= 1e-6);
    for (std::size_t k = 0; k < 2; ++k)
        CHECK(r.ratios[k] == doctest::Approx(0.25).epsilon(0.01));
}

TEST_CASE("asymptotic period") {
    const auto a = asymptotic_period_estimate(1, 0.1, 50, 200);
    CHECK(a.expected == doctest::Approx(std::numbers::pi / 0.2));
    CHECK(a.relative_error <= 0.01);
    const auto b = asymptotic_period_estimate(2, 0.1, 50, 200);
    CHECK(b.mean_spacing / a.mean_spacing == doctest::Approx(0.5).epsilon(0.01));
    CHECK_THROWS_AS(asymptotic_period_estimate(1, 0.1, 50, 60), InsufficientRange);
}

TEST_CASE("classical Hamiltonian") {
    const double q = 1.4;
    CHECK(h_classical(0, 1.3, q) == doctest::Approx(2 * 1.69 * q / ((q + 1) * (q + 1))));
    CHECK(h_classical(0.7, 0, q) == 0.0);
    CHECK(h_classical(-0.3, -1.1, q) == doctest::Approx(h_classical(0.3, 1.1, q)));
    CHECK(h_classical(0.4, 2.0, 1 + 1e-7) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(h_classical(0, initial_momentum(1.7, q), q) == doctest::Approx(1.7));
    const double x = 0.37, p = 1.21, e = 1e-6;
    const auto d = h_classical_partials(x, p, q);
    CHECK(d.dx == doctest::Approx((h_classical(x + e, p, q) - h_classical(x - e, p, q)) / (2 * e)).epsilon(1e-7));
    CHECK(d.dp == doctest::Approx((h_classical(x, p + e, q) - h_classical(x, p - e, q)) / (2 * e)).epsilon(1e-7));
}

TEST_CASE("closed form solves Hamilton's equations") {
    const auto r = compare_closed_vs_integrated(1, 0.1, linspace(0, 5, 500));
    CHECK(r.max_rel_dev <= 1e-3);
    CHECK(r.max_drift <= 1e-8);
    CHECK(r.rows.front().rel_dev == 0.0);
    CHECK(std::abs(r.slope_closed - r.slope_rewritten) <= 1e-12);
    CHECK(std::abs(r.slope_closed - r.slope_hamilton) <= 1e-12);
    // relative correction ~ h^2 (16 E^2 t^2 + 3) / 24, below 1e-5 for t <= 3
    const auto small = compare_closed_vs_integrated(1, 1e-3, linspace(0, 3, 100));
    for (const auto &row : small.rows) {
        const double free = std::sqrt(2.0) * row.t;
        CHECK(std::abs(row.x_closed - free) <= 1e-5 * free);
        CHECK(std::abs(row.x_integrated - free) <= 1e-5 * free);
    }
    const auto free = integrate_hamilton(1, 0, linspace(0, 5, 50));
    CHECK(std::abs(free.x.back() - 5 * std::sqrt(2.0)) <= 1e-8);
}

TEST_CASE("csv") {
    ComparisonReport r;
    r.rows.push_back({0.5, 1.0 / 3, 0.25, 1e-9, 0});
    std::ostringstream out;
    write_csv(out, r);
    CHECK(out.str() == "t,x_closed,x_integrated,rel_dev,energy_drift\n0.5,0.333333333333,0.25,1e-09,0\n");
}
