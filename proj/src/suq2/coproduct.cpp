#include "qlat/suq2/coproduct.hpp"

#include "qlat/error.hpp"

namespace qlat::suq2 {

using num::kron;

Suq2Rep coproduct(const Suq2Rep &a, const Suq2Rep &b) {
    if (a.q != b.q)
        throw InvalidArgument("coproduct of representations with different q");
    const CMat ib = CMat::Identity(b.dim(), b.dim());
    Suq2Rep out;
    out.q = a.q;
    for (const auto &u : a.basis)
        for (const auto &v : b.basis) {
            auto m = u;
            m.insert(m.end(), v.begin(), v.end());
            out.basis.push_back(std::move(m));
        }
    out.T3 = kron(a.T3, ib) + kron(a.tau, b.T3);
    out.Tp = kron(a.Tp, ib) + kron(a.tau_half, b.Tp);
    out.Tm = kron(a.Tm, ib) + kron(a.tau_half, b.Tm);
    out.tau = kron(a.tau, b.tau);
    out.tau_half = kron(a.tau_half, b.tau_half);
    return out;
}

Suq2Rep tensor(const std::vector<Suq2Rep> &reps) {
    if (reps.empty())
        throw InvalidArgument("tensor product of no representations");
    Suq2Rep out = reps.front();
    for (std::size_t k = 1; k < reps.size(); ++k)
        out = coproduct(out, reps[k]);
    return out;
}

} // namespace qlat::suq2
