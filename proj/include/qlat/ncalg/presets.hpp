#pragma once

#include "qlat/ncalg/presentation.hpp"

#include <string>
#include <vector>

namespace qlat::nc {

// Manin plane, x < y:  y x -> q^(-1) x y
PresentationPtr manin_plane();

// x < y:  y x -> x y + x^2 + y^2  (generates a cubic relation)
PresentationPtr counterexample_plane();

// x < p:  p x -> q x p - i
PresentationPtr q_heisenberg();

// Differential calculus on the Manin plane, x < y < dx < dy:
//   dx x -> 1 + q^2 x dx + q lambda y dy     dx y -> q y dx
//   dy x -> q x dy                           dy y -> 1 + q^2 y dy
// The (dx, dy) pair is free: no exchange relation is assumed.
PresentationPtr wz_calculus();

// sU_q(2) acting on the Manin plane, x < y < T3 < Tp < Tm. Contains the plane
// relation, the defining relations of the algebra and the six action rules.
PresentationPtr suq2_module();

// As suq2_module() but without the plane relation: x and y stay free, so the
// ideal generated by x y - q y x is visible instead of reduced away.
PresentationPtr suq2_module_free_plane();

// Generators T3 < Tp < Tm with the three defining relations only.
PresentationPtr suq2_algebra();

// Lookup by CLI name: manin, counterexample, qheisenberg, wz-calculus,
// suq2-module, suq2-module-free, suq2.
PresentationPtr preset(const std::string &name);
std::vector<std::string> preset_names();

} // namespace qlat::nc
