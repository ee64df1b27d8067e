#pragma once

#include "qlat/ncalg/ncpoly.hpp"

#include <string>

namespace qlat::nc {

// Action of the operator generator `d` on a polynomial in the coordinate
// generators: normal_form(d * poly) with every word that still contains an
// operator dropped (d acting on 1 gives 0).
//
// Throws InvalidArgument if `d` is not an operator of the presentation or if
// `poly` contains an operator.
NCPoly derivative_apply(const std::string &d, const NCPoly &poly);

} // namespace qlat::nc
