// One line per acceptance criterion: "ACn PASS|FAIL  description  [measurements]".
// Exit status is the number of failed lines.

#include "qlat/classical/integrate.hpp"
#include "qlat/classical/trajectory.hpp"
#include "qlat/ncalg/flatness.hpp"
#include "qlat/ncalg/parser.hpp"
#include "qlat/ncalg/presets.hpp"
#include "qlat/qphase/dynamics.hpp"
#include "qlat/qphase/reconstruct.hpp"
#include "qlat/qphase/spectrum.hpp"
#include "qlat/suq2/casimir.hpp"
#include "qlat/suq2/coproduct.hpp"
#include "qlat/suq2/exact_spinor.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace qlat;

namespace {

int failures = 0;

std::string g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

void report(const std::string &id, const std::string &what, const std::function<bool(std::string &)> &check) {
    std::string detail;
    bool ok = false;
    try {
        ok = check(detail);
    } catch (const std::exception &e) {
        detail = std::string("exception: ") + e.what();
    }
    failures += !ok;
    std::printf("%-5s %s  %s  [%s]\n", id.c_str(), ok ? "PASS" : "FAIL", what.c_str(), detail.c_str());
    std::fflush(stdout);
}

HalfInt J(int twice) { return HalfInt::from_twice(twice); }

bool ac1(std::string &d) {
    const auto c = suq2::check_spinor();
    bool tau_only = true;
    for (const auto &m : c.table_mismatches)
        tau_only = tau_only && m.rfind("tau|", 0) == 0;
    d = "relations and conjugation exact: " + std::string(c.relations_exact() ? "yes" : "no") +
        ", table mismatches " + std::to_string(c.table_mismatches.size()) + " (tau only: " +
        (tau_only ? "yes" : "no") + ")";
    return c.relations_exact() && tau_only && c.table_mismatches.size() == 2;
}

bool ac2(std::string &d) {
    double worst = 0, worst_casimir = 0;
    for (double q : {1.1, 1.5})
        for (int tj = 1; tj <= 4; ++tj) {
            const auto r = suq2::build_rep(J(tj), q);
            const auto c = suq2::check_casimir(r);
            worst = std::max({worst, suq2::algebra_residuals(r).max(),
                              suq2::conjugation_residuals(r).max(), c.comm_tp, c.comm_tm, c.comm_t3});
            worst_casimir = std::max(worst_casimir, c.defect);
        }
    d = "max residual " + g(worst) + ", Casimir eigenvalue defect " + g(worst_casimir);
    return worst <= 1e-12 && worst_casimir <= 1e-12;
}

bool ac3(std::string &d) {
    const double q = 1.2;
    const auto s = suq2::build_rep(J(1), q);
    const auto t = suq2::coproduct(s, s);
    const auto dec = suq2::casimir_decompose(t);
    const double res = std::max(suq2::algebra_residuals(t).max(), suq2::conjugation_residuals(t).max());
    std::ostringstream o;
    bool ok = dec.size() == 2;
    for (const auto &e : dec)
        o << "j=" << e.j.to_string() << " x" << e.multiplicity << " C=" << g(e.casimir_eigenvalue) << "; ";
    if (ok) {
        ok = dec[0].j == J(0) && dec[0].multiplicity == 1 && std::abs(dec[0].casimir_eigenvalue) <= 1e-10 &&
             dec[1].j == J(2) && dec[1].multiplicity == 3 &&
             std::abs(dec[1].casimir_eigenvalue - (1 + q * q)) <= 1e-10;
    }
    d = o.str() + "relation residual " + g(res);
    return ok && res <= 1e-12;
}

bool ac4(std::string &d) {
    const auto manin = nc::flatness_scan(nc::manin_plane(), 6);
    bool ok = manin.flat();
    for (const auto &deg : manin.degrees)
        ok = ok && deg.normal_monomials == static_cast<std::size_t>(deg.degree + 1) && deg.relations.empty();
    const auto p = nc::counterexample_plane();
    const auto ce = nc::flatness_scan(p, 3);
    const auto expected = nc::parse_expr("x^3 + y^3 + x^2*y + x*y^2", p);
    const auto &rels = ce.degrees.back().relations;
    const bool cubic = ce.relation_count() == 1 && rels.size() == 1 && rels.front() == expected &&
                       rels.front().to_string() == "x^3 + y^3 + x^2*y + x*y^2";
    d = "manin flat to degree 6: " + std::string(ok ? "yes" : "no") + ", counterexample relations: " +
        std::to_string(ce.relation_count()) + (rels.empty() ? "" : " (" + rels.front().to_string() + ")");
    return ok && cubic;
}

bool ac5(std::string &d) {
    const auto f = nc::suq2_module_free_plane();
    const auto g0 = nc::parse_expr("x*y - q*y*x", f);
    bool ok = true;
    for (const char *t : {"Tp", "Tm", "T3"}) {
        const auto a = nc::parse_expr(t, f);
        ok = ok && nc::check_identity(a * g0, g0 * a);
    }
    d = "T+, T-, T3 on the free plane";
    return ok;
}

bool ac6(std::string &d) {
    const auto h = nc::q_heisenberg();
    const auto L = nc::parse_expr("1 + i*(q - 1)*x*p", h);
    const auto x = nc::parse_expr("x", h), p = nc::parse_expr("p", h);
    const auto dx = L * x - nc::parse_expr("q", h) * x * L;
    const auto dp = L * p - nc::parse_expr("q^(-1)", h) * p * L;
    d = "Lx - qxL = " + dx.to_string() + ", Lp - q^-1 pL = " + dp.to_string();
    return dx.is_zero() && dp.is_zero();
}

qphase::PhaseRep phase(double q, int N, double s0 = 1) {
    qphase::PhaseParams p;
    p.q = q;
    p.N = N;
    p.s0 = s0;
    return qphase::build_phase_rep(p);
}

bool ac8(std::string &d) {
    const auto s60 = qphase::x_eigensystem(phase(1.5, 60)).report;
    const auto s30 = qphase::x_eigensystem(phase(1.5, 30)).report;
    d = "ratio deviation N=60 " + g(s60.ratio_dev_max) + ", N=30 " + g(s30.ratio_dev_max) + ", unitarity " +
        g(s60.unitarity);
    return s60.ratio_dev_max <= 1e-3 && s60.ratio_dev_max < s30.ratio_dev_max && s60.unitarity <= 1e-10;
}

bool ac9(std::string &d) {
    double worst = 0;
    for (double s0 : {1.0, 1.2}) {
        const auto rep = phase(1.5, 40, s0);
        const auto e = qphase::hamiltonian_spectrum(rep);
        for (std::size_t k = 0; k < e.size(); ++k) {
            const double expected = 0.5 * s0 * s0 * std::pow(1.5, 2 * rep.basis[k].n);
            worst = std::max(worst, std::abs(e[k] - expected) / expected);
        }
    }
    d = "max relative defect " + g(worst);
    return worst <= 1e-14;
}

bool ac10(std::string &d) {
    const auto grid = classical::linspace(0, 10, 4000);
    const auto r = classical::small_h_limit_check(1, {1e-3, 5e-4, 2.5e-4, 1e-4}, grid);
    bool ok = r.deviations.back() <= 1e-6;
    std::string ratios;
    for (std::size_t k = 0; k < 2; ++k) {
        ok = ok && std::abs(r.ratios[k] - 0.25) <= 0.25 * 0.01;
        ratios += (k ? " " : "") + g(r.ratios[k]);
    }
    d = "deviation at h=1e-4 " + g(r.deviations.back()) + ", deviation ratio per halving of h " + ratios;
    return ok;
}

bool ac11(std::string &d) {
    const auto r = classical::compare_closed_vs_integrated(1, 0.1, classical::linspace(0, 5, 500), 1e-9);
    const double slope = std::abs(r.slope_closed - r.slope_rewritten);
    d = "max relative deviation " + g(r.max_rel_dev) + ", energy drift " + g(r.max_drift) + " (" + r.stepper +
        "), slope identity " + g(slope);
    return r.max_rel_dev <= 1e-3 && r.max_drift <= 1e-8 && slope <= 1e-12;
}

bool ac12(std::string &d) {
    const auto e1 = classical::asymptotic_period_estimate(1, 0.1, 50, 200);
    const auto e2 = classical::asymptotic_period_estimate(2, 0.1, 50, 200);
    const double halving = e2.mean_spacing / e1.mean_spacing;
    d = "spacing " + g(e1.mean_spacing) + " vs pi/(2Eh) " + g(e1.expected) + ", E=2 / E=1 " + g(halving);
    return e1.relative_error <= 0.01 && std::abs(halving - 0.5) <= 0.005;
}

} // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    report("AC1", "spinor representation over exact scalars", ac1);
    report("AC2", "representation residuals, j in {1/2..2}, q in {1.1, 1.5}", ac2);
    report("AC3", "coproduct 1/2 x 1/2 decomposes as j=0 + j=1", ac3);
    report("AC4", "flatness of the Manin plane and the cubic counterexample", ac4);
    report("AC5", "module action preserves the plane ideal", ac5);
    report("AC6", "scaling operator identities", ac6);

    const auto rep = phase(1.5, 40);
    report("AC7a", "P, X, U relations on the interior", [&](std::string &d) {
        const auto r = qphase::relation_residuals(rep);
        d = "max residual " + g(r.max());
        return r.max() <= 1e-12;
    });
    const auto rc = qphase::reconstruct_pxlambda(rep);
    report("AC7b", "reconstructed px - qxp + i and Lambda conjugation", [&](std::string &d) {
        d = "heisenberg " + g(rc.heisenberg) + ", Lambda conjugation " + g(rc.lambda_conj);
        return std::max(rc.heisenberg, rc.lambda_conj) <= 1e-10;
    });
    report("AC7c", "reconstructed p conjugation p^dagger = q^-1 Lambda^-1 p", [&](std::string &d) {
        d = "residual " + g(rc.p_conj);
        return rc.p_conj <= 1e-10;
    });

    report("AC8", "q-lattice spectrum of the doubled X", ac8);
    report("AC9", "spectrum of H = P^2/2", ac9);
    report("AC10", "small-h limit of the classical trajectory", ac10);
    report("AC11", "closed form against integrated Hamilton equations", ac11);
    report("AC12", "asymptotic period pi/(2Eh)", ac12);

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d failed, %.1f s\n", failures, secs);
    return failures;
}
