#pragma once

#include "qlat/numeric/residual.hpp"

#include <vector>

namespace qlat::num {

// Eigenvalues of a Hermitian matrix whose off-diagonal pattern is a union of
// paths (every index couples to at most two others, without cycles).
//
// Each path is unitarily equivalent to a real symmetric tridiagonal matrix with
// the moduli of its couplings; eigenvalues are found by Sturm-count bisection,
// which keeps small eigenvalues accurate relative to themselves when the
// diagonal vanishes. Sorted ascending. Throws NumericalFailure if the pattern is
// not a union of paths.
std::vector<double> chain_eigenvalues(const CMat &h);

// Eigenvalues of the symmetric tridiagonal matrix with diagonal `a` and
// off-diagonal `b` (b.size() == a.size() - 1), ascending.
std::vector<double> tridiagonal_eigenvalues(const std::vector<double> &a,
                                            const std::vector<double> &b);

} // namespace qlat::num
