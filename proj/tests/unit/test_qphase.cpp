#include "doctest.h"

#include "qlat/error.hpp"
#include "qlat/qphase/dynamics.hpp"
#include "qlat/qphase/reconstruct.hpp"
#include "qlat/qphase/spectral_factor.hpp"
#include "qlat/qphase/spectrum.hpp"

#include <cmath>

using namespace qlat;
using namespace qlat::qphase;

namespace {

PhaseRep rep_at(double q, int N, double s0 = 1, Sectors sectors = Sectors::Both) {
    PhaseParams p;
    p.q = q;
    p.N = N;
    p.s0 = s0;
    p.sectors = sectors;
    return build_phase_rep(p);
}

} // namespace

TEST_CASE("matrix elements") {
    const double q = 1.5, lambda = q - 1 / q;
    const auto r = rep_at(q, 10);
    const auto k = r.index_of(3, 1);
    CHECK(std::abs(r.X(r.index_of(2, 1), k) - cplx(0, std::pow(q, -2.5) / lambda)) < 1e-15);
    CHECK(std::abs(r.X(r.index_of(4, 1), k) - cplx(0, -std::pow(q, -3.5) / lambda)) < 1e-15);
    CHECK(r.P(r.index_of(0, 1), r.index_of(0, 1)) == cplx(1, 0));
    CHECK(r.P(r.index_of(0, -1), r.index_of(0, -1)) == cplx(-1, 0));
    CHECK(r.U(r.index_of(2, 1), k) == cplx(1, 0));
    CHECK_THROWS_AS(rep_at(1.0, 10), InvalidArgument);
    CHECK_THROWS_AS(rep_at(1.5, 1), InvalidArgument);
    CHECK_THROWS_AS(rep_at(1.5, 10, 1.5), InvalidArgument);
}

TEST_CASE("relations on the interior") {
    for (double q : {1.1, 1.5})
        for (int N : {20, 40})
            for (Sectors s : {Sectors::Plus, Sectors::Minus, Sectors::Both}) {
                const auto r = relation_residuals(rep_at(q, N, 1, s));
                CHECK(r.max() <= 1e-12);
                CHECK(r.p_hermitian <= 1e-14);
                CHECK(r.x_hermitian <= 1e-14);
            }
}

TEST_CASE("central scaling") {
    const auto a = rep_at(1.5, 12), b = rep_at(1.5, 12, 1.2);
    CHECK(b.P == (1.2 * a.P).eval());
    CHECK(num::max_abs(b.X - a.X / 1.2) <= 1e-15 * num::max_abs(a.X));
}

TEST_CASE("reconstructed x, p and Lambda") {
    const auto rc = reconstruct_pxlambda(rep_at(1.5, 40));
    CHECK(rc.heisenberg <= 1e-10);
    CHECK(rc.lambda_conj <= 1e-10);
    CHECK(rc.lambda_x <= 1e-10);
    CHECK(rc.lambda_p <= 1e-10);
    // p is upper triangular and q^-1 Lambda^-1 p strictly upper triangular,
    // so the adjoint relation cannot hold on this representation.
    CHECK(rc.p_conj > 0.5);
    // xp - px - i = (1 - q) xp, and xp has diagonal i/(q - 1) for every q.
    for (double q : {1.1, 1 + 1e-6})
        CHECK(reconstruct_pxlambda(rep_at(q, 40)).undeformed == doctest::Approx(1).epsilon(1e-6));
}

TEST_CASE("q-lattice spectrum of the doubled X") {
    const auto s30 = x_eigensystem(rep_at(1.5, 30)).report;
    const auto e60 = x_eigensystem(rep_at(1.5, 60));
    const auto &s60 = e60.report;
    CHECK(s60.ratio_dev_max <= 1e-3);
    CHECK(s60.ratio_dev_max < s30.ratio_dev_max);
    CHECK(s60.unitarity <= 1e-10);
    CHECK(s60.reconstruction <= 1e-9);
    CHECK(s60.pair_defect <= 1e-12);
    CHECK(s60.grid_scale == doctest::Approx(2 * 1.5 / 2.5).epsilon(1e-4));
    CHECK(s60.positive.size() == 121);
    CHECK_THROWS_AS(x_eigensystem(rep_at(1.5, 10, 1, Sectors::Plus)), InvalidArgument);
}

TEST_CASE("block sum without the bridge has q^2 spacing") {
    PhaseParams p;
    p.N = 30;
    p.bridge_sectors = false;
    const auto s = x_eigensystem(build_phase_rep(p)).report;
    CHECK(s.ratio_dev_max > 0.4);
}

TEST_CASE("free Hamiltonian") {
    for (double s0 : {1.0, 1.2}) {
        const auto r = rep_at(1.5, 20, s0);
        const auto e = hamiltonian_spectrum(r);
        for (Eigen::Index k = 0; k < r.dim(); ++k)
            CHECK(e[k] == doctest::Approx(0.5 * s0 * s0 * std::pow(1.5, 2 * r.basis[k].n)).epsilon(1e-14));
    }
    const auto r = rep_at(1.5, 20, 1.2);
    CHECK(hamiltonian_spectrum(r)[r.index_of(1, 1)] == doctest::Approx(1.62));
}

TEST_CASE("time evolution") {
    const auto r = rep_at(1.5, 8);
    CVec psi = CVec::Zero(r.dim());
    const auto k = r.index_of(2, -1);
    psi(k) = 1;
    const CVec out = evolve(psi, r, 0.7);
    CHECK(std::abs(out(k) - std::polar(1.0, -0.5 * 2.25 * 2.25 * 0.7)) < 1e-14);
    CVec mix = CVec::Ones(r.dim()) / std::sqrt(double(r.dim()));
    CHECK((evolve(mix, r, 0) - mix).norm() == 0.0);
    for (double t : {1.0, 10.0, 100.0})
        CHECK(std::abs(evolve(mix, r, t).norm() - 1) <= 1e-12);
    CHECK_THROWS_AS(evolve(CVec::Zero(3), r, 1), InvalidArgument);
}

TEST_CASE("spectral factor") {
    const double q = 1.5;
    CHECK(spectral_factor(0.25, q) == doctest::Approx(2 * std::log(q) / (q - 1 / q)));
    CHECK(spectral_factor(0.25 + 1e-9, q) == doctest::Approx(spectral_factor(0.25, q)));
    CHECK(spectral_factor(0.25, q, Bracket::Asymmetric) == doctest::Approx(std::log(q) / (q - 1)));
    CHECK(spectral_factor(0.7, 1.0) == 1.0);
    CHECK(spectral_factor(1.0, q) != doctest::Approx(spectral_factor(1.0, q, Bracket::Asymmetric)));
    const double a = 1.5;
    CHECK(spectral_factor(1.0, q) == doctest::Approx((std::pow(q, a) - std::pow(q, -a)) / (q - 1 / q) / a));
}
