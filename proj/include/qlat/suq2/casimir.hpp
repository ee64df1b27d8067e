#pragma once

#include "qlat/suq2/rep.hpp"

#include <vector>

namespace qlat::suq2 {

// C = q^2 (T-T+ + 1/lambda^2) tau^(-1/2) + (1/lambda^2) tau^(1/2) - (1 + q^2)/lambda^2.
// Throws SingularLimit at q == 1.
CMat casimir_matrix(const Suq2Rep &rep);

// [j]_{-2} [j+1]_2
double casimir_value(HalfInt j, double q);

struct CasimirCheck {
    double comm_tp = 0, comm_tm = 0, comm_t3 = 0; // max-norms of [C, T]
    double eigenvalue = 0;                        // closed form for rep.j
    double defect = 0; // max |C - eigenvalue * 1|, relative to max(1, |eigenvalue|)
};

// Requires an irreducible representation (rep.j set) for the eigenvalue part.
CasimirCheck check_casimir(const Suq2Rep &rep);

struct DecompositionEntry {
    HalfInt j;
    int multiplicity = 0; // dimension of the Casimir eigenspace
    int copies = 0;       // number of spin-j summands: multiplicity / (2j + 1)
    double casimir_eigenvalue = 0;
};

// Groups Casimir eigenvalues (relative tolerance 1e-8) and labels each cluster
// by the j whose closed-form value matches. Throws DecompositionFailure when a
// cluster matches no j or its size is not a multiple of 2j + 1.
std::vector<DecompositionEntry> casimir_decompose(const Suq2Rep &rep);

} // namespace qlat::suq2
