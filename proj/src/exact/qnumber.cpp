#include "qlat/exact/qnumber.hpp"

#include "qlat/error.hpp"

#include <cmath>

namespace qlat {

QExact q_number(HalfInt n, int r) {
    if (r == 0)
        throw InvalidArgument("q-number base r must be nonzero");
    if (!n.is_integer())
        throw NonPolynomial("[" + n.to_string() + "]_" + std::to_string(r) +
                            " is not a Laurent polynomial in q^(1/2)");
    const int m = n.as_int();
    QExact sum;
    if (m >= 0) {
        for (int k = 0; k < m; ++k)
            sum += QExact::s_pow(2 * r * k);
    } else {
        for (int k = 1; k <= -m; ++k)
            sum -= QExact::s_pow(-2 * r * k);
    }
    return sum;
}

double q_number_value(double n, int r, double q) {
    if (r == 0)
        throw InvalidArgument("q-number base r must be nonzero");
    if (!(q > 0.0))
        throw InvalidArgument("q-number requires q > 0");
    if (q == 1.0)
        return n;
    const double h = std::log(q);
    return std::expm1(r * n * h) / std::expm1(r * h);
}

} // namespace qlat
