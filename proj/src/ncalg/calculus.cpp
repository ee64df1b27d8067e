#include "qlat/ncalg/calculus.hpp"

#include "qlat/error.hpp"

#include <algorithm>

namespace qlat::nc {

NCPoly derivative_apply(const std::string &d, const NCPoly &poly) {
    const auto &p = poly.presentation();
    const auto g = p->index_of(d);
    if (!g || !p->is_operator(*g))
        throw InvalidArgument("'" + d + "' is not an operator generator");
    auto has_operator = [&](const Word &w) {
        return std::any_of(w.begin(), w.end(), [&](std::uint8_t c) { return p->is_operator(c); });
    };
    WordSum pushed;
    for (const auto &[w, c] : poly.terms()) {
        if (has_operator(w))
            throw InvalidArgument("operand contains operator " + word_text(*p, w));
        Word dw{*g};
        dw.insert(dw.end(), w.begin(), w.end());
        accumulate(pushed, dw, c);
    }
    WordSum kept;
    for (const auto &[w, c] : normal_form(*p, pushed))
        if (!has_operator(w))
            kept.emplace(w, c);
    return NCPoly(p, kept);
}

} // namespace qlat::nc
