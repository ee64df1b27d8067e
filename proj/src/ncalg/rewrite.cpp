#include "qlat/ncalg/rewrite.hpp"

#include "qlat/error.hpp"

namespace qlat::nc {

void accumulate(WordSum &sum, const Word &w, const QExact &c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = sum.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            sum.erase(it);
    }
}

WordSum rewrite_at(const Presentation &p, const Word &w, std::size_t pos) {
    const RewriteRule *rule = p.rule_for(w.at(pos), w.at(pos + 1));
    if (!rule)
        throw InvalidArgument("no rule applies at the requested position");
    WordSum out;
    for (const auto &[t, c] : rule->target) {
        Word next;
        next.reserve(w.size() - 2 + t.size());
        next.insert(next.end(), w.begin(), w.begin() + pos);
        next.insert(next.end(), t.begin(), t.end());
        next.insert(next.end(), w.begin() + pos + 2, w.end());
        accumulate(out, next, c);
    }
    return out;
}

namespace {

template <class Choose>
WordSum reduce(const Presentation &p, const WordSum &input, Choose choose, std::size_t budget) {
    WordSum pending = input;
    WordSum result;
    std::size_t steps = 0;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word &w = node.key();
        const QExact &c = node.mapped();
        const int pos = choose(w);
        if (pos < 0) {
            accumulate(result, w, c);
            continue;
        }
        if (++steps > budget)
            throw Diverged("normal form exceeded the rewrite budget of " + std::to_string(budget) +
                           " steps");
        for (const auto &[next, d] : rewrite_at(p, w, static_cast<std::size_t>(pos)))
            accumulate(pending, next, c * d);
    }
    return result;
}

} // namespace

WordSum normal_form(const Presentation &p, const WordSum &input, std::size_t budget) {
    return reduce(
        p, input, [&](const Word &w) { return p.leftmost_reducible(w); }, budget);
}

WordSum normal_form_with(const Presentation &p, const WordSum &input,
                         const RewriteStrategy &strategy, std::size_t budget) {
    std::vector<std::size_t> reducible;
    return reduce(
        p, input,
        [&](const Word &w) -> int {
            reducible.clear();
            for (std::size_t k = 0; k + 1 < w.size(); ++k)
                if (p.rule_for(w[k], w[k + 1]))
                    reducible.push_back(k);
            if (reducible.empty())
                return -1;
            const std::size_t pick = strategy(w, reducible);
            if (pick >= reducible.size())
                throw InvalidArgument("rewrite strategy returned an invalid choice");
            return static_cast<int>(reducible[pick]);
        },
        budget);
}

} // namespace qlat::nc
