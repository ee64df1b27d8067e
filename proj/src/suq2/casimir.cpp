#include "qlat/suq2/casimir.hpp"

#include "qlat/error.hpp"
#include "qlat/exact/qnumber.hpp"

#include <algorithm>
#include <cmath>

namespace qlat::suq2 {

using num::max_abs;

CMat casimir_matrix(const Suq2Rep &rep) {
    const double q = rep.q;
    if (q == 1)
        throw SingularLimit("Casimir has poles at q = 1");
    const double l2 = (q - 1 / q) * (q - 1 / q);
    const Eigen::Index n = rep.dim();
    const CMat id = CMat::Identity(n, n);
    const CMat tau_inv_half = rep.tau_half.inverse();
    return q * q * (rep.Tm * rep.Tp + id / l2) * tau_inv_half + rep.tau_half / l2 -
           (1 + q * q) / l2 * id;
}

double casimir_value(HalfInt j, double q) {
    return q_number_value(j.value(), -2, q) * q_number_value(j.value() + 1, 2, q);
}

CasimirCheck check_casimir(const Suq2Rep &rep) {
    const CMat c = casimir_matrix(rep);
    CasimirCheck out;
    out.comm_tp = max_abs(c * rep.Tp - rep.Tp * c);
    out.comm_tm = max_abs(c * rep.Tm - rep.Tm * c);
    out.comm_t3 = max_abs(c * rep.T3 - rep.T3 * c);
    if (!rep.j)
        throw InvalidArgument("Casimir eigenvalue check needs an irreducible representation");
    out.eigenvalue = casimir_value(*rep.j, rep.q);
    out.defect = max_abs(c - out.eigenvalue * CMat::Identity(rep.dim(), rep.dim())) /
                 std::max(1.0, std::abs(out.eigenvalue));
    return out;
}

std::vector<DecompositionEntry> casimir_decompose(const Suq2Rep &rep) {
    constexpr double tol = 1e-8;
    const CMat c = casimir_matrix(rep);
    Eigen::ComplexEigenSolver<CMat> solver(c, false);
    if (solver.info() != Eigen::Success)
        throw NumericalFailure("Casimir eigensolver failed");
    std::vector<double> ev;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k)
        ev.push_back(solver.eigenvalues()(k).real());
    std::sort(ev.begin(), ev.end());

    const int max_twice_j = static_cast<int>(rep.dim()) - 1;
    std::vector<DecompositionEntry> out;
    for (std::size_t start = 0; start < ev.size();) {
        std::size_t end = start + 1;
        while (end < ev.size() &&
               std::abs(ev[end] - ev[start]) <= tol * std::max(1.0, std::abs(ev[start])))
            ++end;
        double mean = 0;
        for (std::size_t k = start; k < end; ++k)
            mean += ev[k];
        mean /= static_cast<double>(end - start);

        DecompositionEntry e;
        bool found = false;
        for (int tj = 0; tj <= max_twice_j && !found; ++tj) {
            const HalfInt j = HalfInt::from_twice(tj);
            const double v = casimir_value(j, rep.q);
            if (std::abs(v - mean) <= tol * std::max(1.0, std::abs(v))) {
                e.j = j;
                found = true;
            }
        }
        if (!found)
            throw DecompositionFailure("Casimir eigenvalue " + std::to_string(mean) +
                                       " matches no spin");
        e.multiplicity = static_cast<int>(end - start);
        e.casimir_eigenvalue = mean;
        if (e.multiplicity % (e.j.twice() + 1) != 0)
            throw DecompositionFailure("eigenspace of j = " + e.j.to_string() +
                                       " has dimension " + std::to_string(e.multiplicity));
        e.copies = e.multiplicity / (e.j.twice() + 1);
        out.push_back(e);
        start = end;
    }
    std::sort(out.begin(), out.end(),
              [](const DecompositionEntry &a, const DecompositionEntry &b) { return a.j < b.j; });
    return out;
}

} // namespace qlat::suq2
