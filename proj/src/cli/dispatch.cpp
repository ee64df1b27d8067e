#include "qlat/cli/dispatch.hpp"

#include "qlat/classical/integrate.hpp"
#include "qlat/classical/trajectory.hpp"
#include "qlat/cli/json_reports.hpp"
#include "qlat/error.hpp"
#include "qlat/exact/qnumber.hpp"
#include "qlat/ncalg/calculus.hpp"
#include "qlat/ncalg/parser.hpp"
#include "qlat/ncalg/presets.hpp"
#include "qlat/qphase/dynamics.hpp"
#include "qlat/qphase/spectral_factor.hpp"
#include "qlat/suq2/coproduct.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace qlat::cli {

namespace {

struct Output {
    bool json = false;
    bool csv = false;
    std::string out;
    std::optional<double> tol;
    bool check = false;

    double tolerance(double fallback) const { return tol.value_or(fallback); }
};

void add_output(CLI::App *app, Output &o, bool csv = false, bool check = true) {
    app->add_flag("--json", o.json, "Emit JSON");
    if (csv)
        app->add_flag("--csv", o.csv, "Emit CSV");
    app->add_option("--out", o.out, "Write the report to this file");
    app->add_option("--tol", o.tol, "Override the check tolerance");
    if (check)
        app->add_flag("--check", o.check, "Exit 1 when a residual exceeds the tolerance");
}

std::string num_text(double v) { return format_number(v); }

// Result of a leaf command: report text and whether its checks passed.
struct Result {
    std::string text;
    bool ok = true;
};

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

std::string line(const std::string &label, double v) { return label + " " + num_text(v) + "\n"; }

suq2::Suq2Rep irrep(const std::string &j, double q) { return suq2::build_rep(HalfInt::parse(j), q); }

// ---- qnum ---------------------------------------------------------------

struct QnumArgs {
    std::string n;
    int r = 0;
    std::optional<double> q;
    bool symbolic = false;
};

Result run_qnum(const QnumArgs &a, const Output &o) {
    const HalfInt n = HalfInt::parse(a.n);
    if (a.r == 0)
        throw InvalidArgument("r must be nonzero");
    const bool want_symbolic = a.symbolic || !a.q;
    Json j;
    j["n"] = n.value();
    j["r"] = a.r;
    std::string text;
    if (want_symbolic) {
        const auto s = q_number(n, a.r).to_string();
        j["symbolic"] = s;
        text += s + "\n";
    }
    if (a.q) {
        const double v = q_number_value(n.value(), a.r, *a.q);
        j["q"] = *a.q;
        j["value"] = v;
        text += num_text(v) + "\n";
    }
    return {o.json ? dump(j) : text, true};
}

// ---- rep / tensor -------------------------------------------------------

struct RepArgs {
    std::vector<std::string> j;
    double q = 1.5;
    bool matrices = false;
};

Result report_rep(const suq2::Suq2Rep &rep, const std::vector<int> &dims, const RepArgs &a,
                  const Output &o) {
    const double tol = o.tolerance(1e-12);
    const RepSummary s = summarize(rep);
    bool ok = s.residuals.max() <= tol && s.conjugation.max() <= tol;
    if (s.casimir_commutator)
        ok = ok && *s.casimir_commutator <= tol;
    if (s.casimir)
        ok = ok && s.casimir->defect <= tol;
    if (s.decomposition_error)
        ok = false;
    if (s.spinor)
        ok = ok && s.spinor->relations_exact() && s.spinor->dagger_rel2_is_rel3;
    if (o.json)
        return {dump(rep_json(rep, dims, s, a.matrices)), ok};

    std::ostringstream t;
    t << "j " << (rep.j ? rep.j->to_string() : "-") << "\nq " << num_text(rep.q) << "\ndims";
    for (int d : dims)
        t << ' ' << d;
    t << "\n"
      << line("rel1", s.residuals.rel1) << line("rel2", s.residuals.rel2)
      << line("rel3", s.residuals.rel3) << line("conj", s.conjugation.max());
    if (s.casimir)
        t << line("casimir_eigenvalue", s.casimir->eigenvalue)
          << line("casimir_defect", s.casimir->defect);
    if (s.casimir_commutator)
        t << line("casimir_commutator", *s.casimir_commutator);
    for (const auto &e : s.decomposition)
        t << "block j=" << e.j.to_string() << " multiplicity " << e.multiplicity << " copies "
          << e.copies << " casimir " << num_text(e.casimir_eigenvalue) << "\n";
    if (s.decomposition_error)
        t << "decomposition failed: " << *s.decomposition_error << "\n";
    if (s.spinor) {
        t << "spinor exact " << (s.spinor->relations_exact() ? "yes" : "no") << "\n";
        for (const auto &m : s.spinor->table_mismatches)
            t << "table mismatch " << m << "\n";
    }
    return {t.str(), ok};
}

Result run_rep(const RepArgs &a, const Output &o) {
    if (a.j.size() != 1)
        throw InvalidArgument("rep takes exactly one --j");
    const auto rep = irrep(a.j.front(), a.q);
    return report_rep(rep, {static_cast<int>(rep.dim())}, a, o);
}

Result run_tensor(const RepArgs &a, const Output &o) {
    if (a.j.size() < 2)
        throw InvalidArgument("tensor needs at least two --j");
    std::vector<suq2::Suq2Rep> reps;
    std::vector<int> dims;
    for (const auto &j : a.j) {
        reps.push_back(irrep(j, a.q));
        dims.push_back(static_cast<int>(reps.back().dim()));
    }
    return report_rep(suq2::tensor(reps), dims, a, o);
}

// ---- plane --------------------------------------------------------------

struct PlaneArgs {
    std::string preset;
    std::string gens;
    std::vector<std::string> rules;
    std::string expr;
    std::string wrt;
    int max_degree = 4;
};

nc::PresentationPtr presentation(const PlaneArgs &a, const std::string &fallback) {
    if (!a.rules.empty() || !a.gens.empty()) {
        if (!a.preset.empty())
            throw InvalidArgument("--preset cannot be combined with --gens/--rule");
        std::vector<std::string> gens;
        std::stringstream ss(a.gens);
        for (std::string g; std::getline(ss, g, ',');) {
            g.erase(std::remove(g.begin(), g.end(), ' '), g.end());
            if (!g.empty())
                gens.push_back(g);
        }
        if (gens.empty())
            throw InvalidArgument("--rule needs --gens");
        std::vector<nc::Presentation::Generator> generators;
        for (const auto &g : gens)
            generators.push_back({g, false});
        std::vector<nc::RewriteRule> rules;
        for (const auto &r : a.rules)
            rules.push_back(nc::parse_rule(r, gens));
        return std::make_shared<const nc::Presentation>("custom", generators, rules);
    }
    return nc::preset(a.preset.empty() ? fallback : a.preset);
}

Result run_normalize(const PlaneArgs &a, const Output &o) {
    const auto p = presentation(a, "manin");
    const auto nf = nc::parse_expr(a.expr, p);
    if (o.json)
        return {dump(Json{{"presentation", p->name()}, {"input", a.expr}, {"normal_form", nf.to_string()}}),
                true};
    return {nf.to_string() + "\n", true};
}

Result run_flatness(const PlaneArgs &a, const Output &o) {
    const auto p = presentation(a, "manin");
    const auto r = nc::flatness_scan(p, a.max_degree);
    if (o.json)
        return {dump(flatness_json(r)), r.flat()};
    std::ostringstream t;
    t << "presentation " << r.presentation << "\ncertification " << r.certification << "\n";
    for (const auto &d : r.degrees) {
        t << "degree " << d.degree << ": " << d.normal_monomials << " normal monomials, "
          << d.independent << " independent, " << d.relations.size() << " relations, "
          << nc::to_string(d.confluence) << "\n";
        for (const auto &rel : d.relations)
            t << "  " << rel.to_string() << " = 0\n";
    }
    t << (r.flat() ? "flat\n" : "not flat\n");
    return {t.str(), r.flat()};
}

Result run_derive(const PlaneArgs &a, const Output &o) {
    const auto p = presentation(a, "wz-calculus");
    const auto d = nc::derivative_apply(a.wrt, nc::parse_expr(a.expr, p));
    if (o.json)
        return {dump(Json{{"presentation", p->name()}, {"wrt", a.wrt}, {"input", a.expr},
                          {"result", d.to_string()}}),
                true};
    return {d.to_string() + "\n", true};
}

// ---- phase --------------------------------------------------------------

struct PhaseArgs {
    double q = 1.5;
    int N = 40;
    double s0 = 1;
    std::string sectors = "both";
    bool no_bridge = false;
    bool matrices = false;
    double zeta = 0.25;
    std::string convention = "both";
};

qphase::PhaseRep phase_rep(const PhaseArgs &a) {
    qphase::PhaseParams p;
    p.q = a.q;
    p.N = a.N;
    p.s0 = a.s0;
    p.bridge_sectors = !a.no_bridge;
    if (a.sectors == "both")
        p.sectors = qphase::Sectors::Both;
    else if (a.sectors == "plus")
        p.sectors = qphase::Sectors::Plus;
    else if (a.sectors == "minus")
        p.sectors = qphase::Sectors::Minus;
    else
        throw InvalidArgument("--sectors must be plus, minus or both");
    return qphase::build_phase_rep(p);
}

Result run_phase_rep(const PhaseArgs &a, const Output &o) {
    const auto rep = phase_rep(a);
    const auto r = qphase::relation_residuals(rep);
    const bool ok = r.max() <= o.tolerance(1e-12);
    Json j = phase_params_json(rep.params);
    j["dim"] = rep.dim();
    j["residuals"] = phase_residuals_json(r);
    if (a.matrices)
        j["matrices"] = {{"P", matrix_json(rep.P)}, {"X", matrix_json(rep.X)}, {"U", matrix_json(rep.U)}};
    if (o.json)
        return {dump(j), ok};
    std::string t;
    for (const auto &[k, v] : j["residuals"].items())
        t += line(k, v.get<double>());
    return {t, ok};
}

Result run_reconstruct(const PhaseArgs &a, const Output &o) {
    const auto rep = phase_rep(a);
    const auto r = qphase::reconstruct_pxlambda(rep);
    const double tol = o.tolerance(1e-10);
    const bool ok = std::max({r.heisenberg, r.p_conj, r.lambda_conj, r.lambda_x, r.lambda_p}) <= tol;
    Json j = phase_params_json(rep.params);
    j["residuals"] = reconstruction_json(r);
    if (o.json)
        return {dump(j), ok};
    std::string t;
    for (const auto &[k, v] : j["residuals"].items())
        t += line(k, v.get<double>());
    return {t, ok};
}

Result run_xspec(const PhaseArgs &a, const Output &o) {
    const auto rep = phase_rep(a);
    const auto sys = qphase::x_eigensystem(rep);
    const auto &s = sys.report;
    const bool ok = s.ratio_dev_max <= o.tolerance(1e-3) && s.unitarity <= 1e-10;
    Json j = phase_params_json(rep.params);
    j["residuals"] = phase_residuals_json(qphase::relation_residuals(rep));
    const Json spec = spectrum_json(s);
    for (const auto &[k, v] : spec.items())
        j[k] = v;
    if (o.json)
        return {dump(j), ok};
    std::ostringstream t;
    t << line("ratio_dev_max", s.ratio_dev_max) << line("grid_scale", s.grid_scale)
      << line("unitarity", s.unitarity) << line("reconstruction", s.reconstruction)
      << "window " << s.window_begin << " " << s.window_end << "\nratios";
    for (double r : s.ratios)
        t << ' ' << num_text(r);
    t << "\n";
    return {t.str(), ok};
}

Result run_qft(const PhaseArgs &a, const Output &o) {
    const auto sys = qphase::x_eigensystem(phase_rep(a));
    if (o.json)
        return {dump(Json{{"eigenvalues", sys.report.eigenvalues},
                          {"eigenvectors", matrix_json(sys.eigenvectors)}}),
                true};
    std::ostringstream t;
    t << "row,col,re,im\n";
    const auto &v = sys.eigenvectors;
    for (Eigen::Index i = 0; i < v.rows(); ++i)
        for (Eigen::Index k = 0; k < v.cols(); ++k)
            t << i << ',' << k << ',' << num_text(v(i, k).real()) << ','
              << num_text(v(i, k).imag()) << "\n";
    return {t.str(), true};
}

Result run_spectrum(const PhaseArgs &a, const Output &o) {
    const auto rep = phase_rep(a);
    const auto e = qphase::hamiltonian_spectrum(rep);
    const double tol = o.tolerance(1e-14);
    bool ok = true;
    Json levels = Json::array();
    std::ostringstream t;
    t << "n,sigma,energy\n";
    for (Eigen::Index k = 0; k < rep.dim(); ++k) {
        const auto [n, sigma] = rep.basis[k];
        const double expected = 0.5 * a.s0 * a.s0 * std::pow(a.q, 2 * n);
        ok = ok && std::abs(e[k] - expected) <= tol * expected;
        levels.push_back({{"n", n}, {"sigma", sigma}, {"energy", e[k]}});
        t << n << ',' << sigma << ',' << num_text(e[k]) << "\n";
    }
    if (o.json) {
        Json j = phase_params_json(rep.params);
        j["levels"] = levels;
        j["min_energy"] = *std::min_element(e.begin(), e.end());
        return {dump(j), ok};
    }
    return {t.str(), ok};
}

Result run_factor(const PhaseArgs &a, const Output &o) {
    Json j{{"zeta", a.zeta}, {"q", a.q}};
    std::string t;
    for (auto b : {qphase::Bracket::Symmetric, qphase::Bracket::Asymmetric}) {
        const auto name = qphase::to_string(b);
        if (a.convention != "both" && a.convention != name)
            continue;
        const double v = qphase::spectral_factor(a.zeta, a.q, b);
        j[name] = v;
        t += line(name, v);
    }
    if (a.convention != "both" && a.convention != "symmetric" && a.convention != "asymmetric")
        throw InvalidArgument("--convention must be symmetric, asymmetric or both");
    return {o.json ? dump(j) : t, true};
}

// ---- classical ----------------------------------------------------------

struct ClassicalArgs {
    double E = 1;
    double h = 0.1;
    double t_max = 5;
    double period_t_min = 50;
    double period_t_max = 200;
    int samples = 500;
    double integrator_tol = 1e-9;
};

Result run_traj(const ClassicalArgs &a, const Output &o) {
    const auto r = classical::compare_closed_vs_integrated(
        a.E, a.h, classical::linspace(0, a.t_max, a.samples), a.integrator_tol);
    if (o.json)
        return {dump(comparison_json(r, true)), true};
    std::ostringstream t;
    classical::write_csv(t, r);
    return {t.str(), true};
}

Result run_verify(const ClassicalArgs &a, const Output &o) {
    const double tol = o.tolerance(1e-3);
    const auto r = classical::compare_closed_vs_integrated(
        a.E, a.h, classical::linspace(0, a.t_max, a.samples), a.integrator_tol);
    const auto small = classical::small_h_limit_check(a.E, {1e-3, 5e-4, 2.5e-4, 1e-4},
                                                      classical::linspace(0, 10, 2000));
    const double slope_defect = std::max(std::abs(r.slope_closed - r.slope_rewritten),
                                         std::abs(r.slope_closed - r.slope_hamilton));
    const bool ok = r.max_rel_dev <= tol && r.max_drift <= 10 * a.integrator_tol &&
                    slope_defect <= 1e-12;
    if (o.json) {
        Json j = comparison_json(r, false);
        j["slope_defect"] = slope_defect;
        j["small_h"] = small_h_json(small);
        return {dump(j), ok};
    }
    std::ostringstream t;
    t << line("max_rel_dev", r.max_rel_dev) << line("max_energy_drift", r.max_drift)
      << line("slope_defect", slope_defect) << "stepper " << r.stepper << "\n";
    for (std::size_t k = 0; k < small.h_values.size(); ++k)
        t << "small_h " << num_text(small.h_values[k]) << " " << num_text(small.deviations[k]) << "\n";
    return {t.str(), ok};
}

Result run_period(const ClassicalArgs &a, const Output &o) {
    const auto r = classical::asymptotic_period_estimate(a.E, a.h, a.period_t_min, a.period_t_max);
    const bool ok = r.relative_error <= o.tolerance(0.01);
    if (o.json)
        return {dump(period_json(r)), ok};
    std::ostringstream t;
    t << line("mean_spacing", r.mean_spacing) << line("expected", r.expected)
      << line("relative_error", r.relative_error) << "maxima " << r.maxima.size() << "\n";
    return {t.str(), ok};
}

} // namespace

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"q-deformed algebra workbench", "qlat"};
    app.set_help_flag("--help", "Print help and exit");
    app.require_subcommand(1);
    Output o;
    std::function<Result()> run;

    QnumArgs qa;
    auto *qnum = app.add_subcommand("qnum", "q-number [n]_r");
    qnum->add_option("--n", qa.n, "Index (half-integer)")->required();
    qnum->add_option("--r", qa.r, "Base exponent (nonzero)")->required();
    qnum->add_option("--q", qa.q, "Evaluate at this q");
    qnum->add_flag("--symbolic", qa.symbolic, "Print the exact Laurent polynomial");
    add_output(qnum, o, false, false);
    qnum->callback([&] { run = [&] { return run_qnum(qa, o); }; });

    RepArgs ra;
    auto *rep = app.add_subcommand("rep", "Spin-j representation and its checks");
    rep->add_option("--j", ra.j, "Spin (decimal or fraction)")->required()->expected(1);
    rep->add_option("--q", ra.q, "Deformation parameter (>= 1)");
    rep->add_flag("--matrices", ra.matrices, "Include matrices in JSON output");
    add_output(rep, o);
    rep->callback([&] { run = [&] { return run_rep(ra, o); }; });

    auto *tensor = app.add_subcommand("tensor", "Coproduct of spin representations");
    tensor->add_option("--j", ra.j, "Spin of a factor (repeat)")->required()->take_all();
    tensor->add_option("--q", ra.q, "Deformation parameter (>= 1)");
    tensor->add_flag("--matrices", ra.matrices, "Include matrices in JSON output");
    add_output(tensor, o);
    tensor->callback([&] { run = [&] { return run_tensor(ra, o); }; });

    PlaneArgs pa;
    auto *plane = app.add_subcommand("plane", "Noncommutative polynomial algebra");
    plane->require_subcommand(1);
    auto add_presentation = [&](CLI::App *c) {
        c->add_option("--preset", pa.preset, "Rule set")
            ->check(CLI::IsMember(nc::preset_names()));
        c->add_option("--gens", pa.gens, "Ordered generators of a custom rule set, e.g. x,y");
        c->add_option("--rule", pa.rules, "Custom rule, e.g. 'y*x -> (1/q)*x*y' (repeat)");
    };
    auto *normalize = plane->add_subcommand("normalize", "Normal form of an expression");
    add_presentation(normalize);
    normalize->add_option("--expr", pa.expr, "Expression")->required();
    add_output(normalize, o, false, false);
    normalize->callback([&] { run = [&] { return run_normalize(pa, o); }; });
    auto *flatness = plane->add_subcommand("flatness", "Relations implied up to a degree");
    add_presentation(flatness);
    flatness->add_option("--max-degree", pa.max_degree, "Largest degree (1..8)");
    add_output(flatness, o);
    flatness->callback([&] {
        run = [&] {
            auto r = run_flatness(pa, o);
            r.ok = r.ok || !o.check;
            return r;
        };
    });
    auto *derive = plane->add_subcommand("derive", "Action of a derivative");
    add_presentation(derive);
    derive->add_option("--wrt", pa.wrt, "Operator generator, e.g. dx")->required();
    derive->add_option("--expr", pa.expr, "Polynomial in the coordinates")->required();
    add_output(derive, o, false, false);
    derive->callback([&] { run = [&] { return run_derive(pa, o); }; });

    PhaseArgs ha;
    auto *phase = app.add_subcommand("phase", "q-deformed phase space");
    phase->require_subcommand(1);
    auto add_phase = [&](CLI::App *c) {
        c->add_option("--q", ha.q, "Deformation parameter (> 1)");
        c->add_option("--N", ha.N, "Window half-width");
        c->add_option("--s0", ha.s0, "Eigenvalue of the central element, in [1, q)");
        c->add_option("--sectors", ha.sectors, "plus, minus or both");
        c->add_flag("--no-bridge", ha.no_bridge, "Plain block sum of the two sectors");
    };
    struct PhaseCommand {
        const char *name, *help;
        Result (*fn)(const PhaseArgs &, const Output &);
        bool csv, check;
    };
    const PhaseCommand phase_commands[] = {
        {"rep", "Representation and relation residuals", run_phase_rep, false, true},
        {"reconstruct", "x, p and Lambda with their residuals", run_reconstruct, false, true},
        {"xspec", "Spectrum of the doubled X", run_xspec, false, true},
        {"qft", "Eigenvector matrix of X (q-Fourier kernel)", run_qft, true, false},
        {"spectrum", "Spectrum of H = P^2/2", run_spectrum, true, true},
        {"factor", "Spectral factor [2z - 1/2]/(2z - 1/2)", run_factor, false, false},
    };
    for (const auto &pc : phase_commands) {
        auto *c = phase->add_subcommand(pc.name, pc.help);
        add_phase(c);
        if (std::string(pc.name) == "rep")
            c->add_flag("--matrices", ha.matrices, "Include P, X, U in JSON output");
        if (std::string(pc.name) == "factor") {
            c->add_option("--zeta", ha.zeta, "Eigenvalue of z");
            c->add_option("--convention", ha.convention, "symmetric, asymmetric or both");
        }
        add_output(c, o, pc.csv, pc.check);
        auto fn = pc.fn;
        c->callback([&, fn] { run = [&, fn] { return fn(ha, o); }; });
    }

    ClassicalArgs ca;
    auto *classical = app.add_subcommand("classical", "Classical limit");
    classical->require_subcommand(1);
    auto add_classical = [&](CLI::App *c) {
        c->add_option("--E", ca.E, "Energy (> 0)");
        c->add_option("--h", ca.h, "Deformation, q = e^h");
    };
    auto *traj = classical->add_subcommand("traj", "Closed form against integration (CSV)");
    add_classical(traj);
    traj->add_option("--t-max", ca.t_max, "End of the time grid");
    traj->add_option("--samples", ca.samples, "Number of grid intervals");
    traj->add_option("--integrator-tol", ca.integrator_tol, "Integrator tolerance");
    add_output(traj, o, true, false);
    traj->callback([&] { run = [&] { return run_traj(ca, o); }; });
    auto *verify = classical->add_subcommand("verify", "Closed form, oracle and small-h limit");
    add_classical(verify);
    verify->add_option("--t-max", ca.t_max, "End of the time grid");
    verify->add_option("--samples", ca.samples, "Number of grid intervals");
    verify->add_option("--integrator-tol", ca.integrator_tol, "Integrator tolerance");
    add_output(verify, o);
    verify->callback([&] { run = [&] { return run_verify(ca, o); }; });
    auto *period = classical->add_subcommand("period", "Spacing of the maxima for large t");
    add_classical(period);
    period->add_option("--t-min", ca.period_t_min, "Start of the range");
    period->add_option("--t-max", ca.period_t_max, "End of the range");
    add_output(period, o);
    period->callback([&] { run = [&] { return run_period(ca, o); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!run) {
        err << "error: no command\n";
        return kExitUsage;
    }

    Result result;
    try {
        result = run();
    } catch (const InvalidArgument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NonPolynomial &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedInverse &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SingularLimit &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitDefect;
    }

    if (o.out.empty()) {
        out << result.text;
    } else {
        std::ofstream f(o.out);
        if (!(f << result.text)) {
            err << "error: cannot write " << o.out << "\n";
            return kExitDefect;
        }
    }
    if (o.check && !result.ok) {
        err << "check failed\n";
        return kExitDefect;
    }
    return kExitOk;
}

} // namespace qlat::cli
