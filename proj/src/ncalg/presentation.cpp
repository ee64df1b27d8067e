#include "qlat/ncalg/presentation.hpp"

#include "qlat/error.hpp"

#include <algorithm>
#include <set>

namespace qlat::nc {

Presentation::Presentation(std::string name, std::vector<Generator> generators,
                           std::vector<RewriteRule> rules,
                           std::vector<std::pair<std::uint8_t, std::uint8_t>> free_pairs)
    : name_(std::move(name)), generators_(std::move(generators)), rules_(std::move(rules)) {
    const std::size_t n = generators_.size();
    if (n == 0 || n > 16)
        throw InvalidArgument("presentation needs between 1 and 16 generators");
    std::set<std::string> seen;
    for (const auto &g : generators_) {
        if (g.name.empty() || g.name == "q" || g.name == "i")
            throw InvalidArgument("invalid generator name '" + g.name + "'");
        if (!seen.insert(g.name).second)
            throw InvalidArgument("duplicate generator '" + g.name + "'");
    }

    rule_index_.assign(n * n, -1);
    for (std::size_t k = 0; k < rules_.size(); ++k) {
        const auto &r = rules_[k];
        if (r.left >= n || r.right >= n)
            throw InvalidArgument("rule refers to unknown generator");
        if (r.left <= r.right)
            throw InvalidArgument("rule " + generators_[r.left].name + "*" +
                                  generators_[r.right].name + " is not an out-of-order pair");
        int &slot = rule_index_[r.left * n + r.right];
        if (slot >= 0)
            throw InvalidArgument("duplicate rule for " + generators_[r.left].name + "*" +
                                  generators_[r.right].name);
        slot = static_cast<int>(k);
    }

    std::vector<bool> is_free(n * n, false);
    for (auto [b, a] : free_pairs) {
        if (b < a)
            std::swap(a, b);
        if (b >= n || a == b)
            throw InvalidArgument("invalid free pair");
        if (rule_index_[b * n + a] >= 0)
            throw InvalidArgument("pair declared free but has a rule");
        is_free[b * n + a] = true;
        has_free_pairs_ = true;
    }
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a = 0; a < b; ++a)
            if (rule_index_[b * n + a] < 0 && !is_free[b * n + a])
                throw InvalidArgument("missing rule for out-of-order pair " + generators_[b].name +
                                      "*" + generators_[a].name);

    for (const auto &r : rules_) {
        for (const auto &[w, c] : r.target) {
            if (w.size() > 2)
                throw InvalidArgument("rule target of degree > 2");
            if (c.is_zero())
                throw InvalidArgument("zero coefficient in rule target");
            if (!is_normal(w))
                throw InvalidArgument("rule target is not normal-ordered");
        }
    }
}

PresentationPtr Presentation::free(std::string name, std::vector<std::string> generators) {
    std::vector<Generator> gens;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs;
    for (std::size_t b = 0; b < generators.size(); ++b) {
        gens.push_back({generators[b], false});
        for (std::size_t a = 0; a < b; ++a)
            pairs.emplace_back(static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(a));
    }
    return std::make_shared<Presentation>(std::move(name), std::move(gens),
                                          std::vector<RewriteRule>{}, std::move(pairs));
}

std::optional<std::uint8_t> Presentation::index_of(const std::string &name) const {
    for (std::size_t k = 0; k < generators_.size(); ++k)
        if (generators_[k].name == name)
            return static_cast<std::uint8_t>(k);
    return std::nullopt;
}

const RewriteRule *Presentation::rule_for(std::uint8_t left, std::uint8_t right) const {
    const int k = rule_index_[left * generators_.size() + right];
    return k < 0 ? nullptr : &rules_[k];
}

bool Presentation::q_independent() const {
    for (const auto &r : rules_)
        for (const auto &[w, c] : r.target)
            if (!c.is_constant())
                return false;
    return true;
}

bool Presentation::is_normal(const Word &w) const { return leftmost_reducible(w) < 0; }

int Presentation::leftmost_reducible(const Word &w) const {
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (rule_for(w[k], w[k + 1]))
            return static_cast<int>(k);
    return -1;
}

bool operator==(const Presentation &a, const Presentation &b) {
    if (&a == &b)
        return true;
    if (a.generators_.size() != b.generators_.size() || a.rule_index_ != b.rule_index_)
        return false;
    for (std::size_t k = 0; k < a.generators_.size(); ++k)
        if (a.generators_[k].name != b.generators_[k].name)
            return false;
    for (std::size_t k = 0; k < a.rules_.size(); ++k)
        if (a.rules_[k].target != b.rules_[k].target)
            return false;
    return true;
}

} // namespace qlat::nc
