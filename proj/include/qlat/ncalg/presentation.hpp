#pragma once

#include "qlat/exact/qexact.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qlat::nc {

// A word in the generators, stored as generator indices.
using Word = std::vector<std::uint8_t>;
// Finite linear combination of words.
using WordSum = std::map<Word, QExact>;

// Right side of a reordering rule g_b g_a -> sum_k c_k w_k (+ constant as the
// empty word). Every w_k has length <= 2 and is already normal.
struct RewriteRule {
    std::uint8_t left;  // g_b
    std::uint8_t right; // g_a, with a < b
    WordSum target;
};

// Ordered generator list plus quadratic-affine reordering rules.
//
// A pair (b, a) with b > a normally carries exactly one rule. Pairs listed as
// free carry none: both orders are normal (used for the d_x/d_y pair of the
// differential calculus, and for the x/y pair of the module presentation with
// an unreduced plane).
class Presentation {
  public:
    struct Generator {
        std::string name;
        bool is_operator = false;
    };

    Presentation(std::string name, std::vector<Generator> generators,
                 std::vector<RewriteRule> rules,
                 std::vector<std::pair<std::uint8_t, std::uint8_t>> free_pairs = {});

    // Presentation without rules: every word is normal.
    static std::shared_ptr<const Presentation> free(std::string name,
                                                    std::vector<std::string> generators);

    const std::string &name() const noexcept { return name_; }
    const std::vector<Generator> &generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    std::optional<std::uint8_t> index_of(const std::string &name) const;
    const std::string &generator_name(std::uint8_t g) const { return generators_.at(g).name; }
    bool is_operator(std::uint8_t g) const { return generators_.at(g).is_operator; }

    // Rule for the adjacent pair (left, right), if any.
    const RewriteRule *rule_for(std::uint8_t left, std::uint8_t right) const;
    const std::vector<RewriteRule> &rules() const noexcept { return rules_; }
    bool has_free_pairs() const noexcept { return has_free_pairs_; }
    // Every rule coefficient is independent of q.
    bool q_independent() const;

    bool is_normal(const Word &w) const;
    // Index of the leftmost adjacent pair with a rule, or -1.
    int leftmost_reducible(const Word &w) const;

    friend bool operator==(const Presentation &a, const Presentation &b);

  private:
    std::string name_;
    std::vector<Generator> generators_;
    std::vector<RewriteRule> rules_;
    std::vector<int> rule_index_; // size n*n, -1 when no rule
    bool has_free_pairs_ = false;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

} // namespace qlat::nc
