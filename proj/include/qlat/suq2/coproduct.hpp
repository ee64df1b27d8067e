#pragma once

#include "qlat/suq2/rep.hpp"

#include <vector>

namespace qlat::suq2 {

// Delta(T3) = T3 (x) 1 + tau (x) T3,  Delta(T+-) = T+- (x) 1 + tau^(1/2) (x) T+-,
// Delta(tau) = tau (x) tau. Throws InvalidArgument when the q values differ.
Suq2Rep coproduct(const Suq2Rep &a, const Suq2Rep &b);

// Left-nested coproduct of reps[0] (x) reps[1] (x) ...
Suq2Rep tensor(const std::vector<Suq2Rep> &reps);

} // namespace qlat::suq2
