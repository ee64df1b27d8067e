#pragma once

#include "qlat/ncalg/presentation.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace qlat::nc {

inline constexpr std::size_t kDefaultStepBudget = 2'000'000;

// One rewrite step: replaces the pair at `pos` in `w` by its rule target.
WordSum rewrite_at(const Presentation &p, const Word &w, std::size_t pos);

// Normal form under the presentation's rules, always rewriting the leftmost
// reducible adjacent pair. Throws Diverged once more than `budget` rewrite
// steps have been applied.
WordSum normal_form(const Presentation &p, const WordSum &input,
                    std::size_t budget = kDefaultStepBudget);

// Picks one entry of `reducible` (positions of reducible pairs in `w`).
using RewriteStrategy =
    std::function<std::size_t(const Word &w, const std::vector<std::size_t> &reducible)>;

// Same fixed point, but with a caller-chosen rewrite position at every step.
WordSum normal_form_with(const Presentation &p, const WordSum &input,
                         const RewriteStrategy &strategy,
                         std::size_t budget = kDefaultStepBudget);

void accumulate(WordSum &sum, const Word &w, const QExact &c);

} // namespace qlat::nc
