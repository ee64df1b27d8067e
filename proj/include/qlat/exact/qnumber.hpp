#pragma once

#include "qlat/exact/half_int.hpp"
#include "qlat/exact/qexact.hpp"

namespace qlat {

// [n]_r = (1 - q^(r n)) / (1 - q^r), exactly.
//
// The quotient is a Laurent polynomial in s only for integer n; half-integer n
// (e.g. [3/2]_2 = (1 + q + q^2)/(1 + q)) throws NonPolynomial. r == 0 throws
// InvalidArgument.
QExact q_number(HalfInt n, int r);

// Floating-point [n]_r at real q > 0, any real n. Returns n at q == 1.
double q_number_value(double n, int r, double q);

} // namespace qlat
