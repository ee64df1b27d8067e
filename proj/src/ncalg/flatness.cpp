#include "qlat/ncalg/flatness.hpp"

#include "qlat/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qlat::nc {

std::string to_string(Confluence c) {
    switch (c) {
    case Confluence::Confluent:
        return "confluent";
    case Confluence::NonConfluent:
        return "non-confluent";
    case Confluence::NonTerminating:
        return "non-terminating";
    case Confluence::Skipped:
        break;
    }
    return "skipped";
}

bool FlatnessReport::flat() const { return relation_count() == 0; }

std::size_t FlatnessReport::relation_count() const {
    std::size_t n = 0;
    for (const auto &d : degrees)
        n += d.relations.size();
    return n;
}

namespace {

using SparseRow = std::map<int, GaussRat>;
using Relation = std::map<Word, GaussRat>;

std::vector<Word> all_words(std::size_t generators, int max_degree, std::size_t max_words) {
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<Word> next;
        for (const auto &w : layer)
            for (std::size_t g = 0; g < generators; ++g) {
                Word v = w;
                v.push_back(static_cast<std::uint8_t>(g));
                next.push_back(std::move(v));
            }
        if (out.size() + next.size() > max_words)
            throw Diverged("flatness scan exceeds " + std::to_string(max_words) + " words");
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

// Relations among normal words with coefficients evaluated at s = s0.
std::vector<Relation> eliminate(const Presentation &p, const std::vector<Word> &words,
                                const GaussRat &s0) {
    // Column priority: non-normal words first, then normal words by descending
    // degree and rendering order, so pivots are leading monomials.
    std::vector<Word> order = words;
    std::stable_sort(order.begin(), order.end(), [&](const Word &a, const Word &b) {
        const bool na = p.is_normal(a), nb = p.is_normal(b);
        if (na != nb)
            return !na;
        if (a.size() != b.size())
            return a.size() > b.size();
        return render_before(p, a, b);
    });
    std::map<Word, int> column;
    for (std::size_t k = 0; k < order.size(); ++k)
        column.emplace(order[k], static_cast<int>(k));

    std::map<int, SparseRow> pivots;
    auto insert = [&](SparseRow row) {
        while (!row.empty()) {
            const int lead = row.begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                const GaussRat inv = row.begin()->second.inverse();
                for (auto &[c, v] : row)
                    v *= inv;
                pivots.emplace(lead, std::move(row));
                return;
            }
            const GaussRat f = row.begin()->second;
            for (const auto &[c, v] : it->second) {
                auto [slot, inserted] = row.try_emplace(c, -(f * v));
                if (!inserted) {
                    slot->second -= f * v;
                    if (slot->second.is_zero())
                        row.erase(slot);
                }
            }
        }
    };

    for (const auto &w : words) {
        for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
            if (!p.rule_for(w[pos], w[pos + 1]))
                continue;
            SparseRow row;
            row[column.at(w)] = GaussRat(1);
            for (const auto &[next, c] : rewrite_at(p, w, pos)) {
                const GaussRat v = c.evaluate_at_s(s0);
                auto [slot, inserted] = row.try_emplace(column.at(next), -v);
                if (!inserted) {
                    slot->second -= v;
                    if (slot->second.is_zero())
                        row.erase(slot);
                }
            }
            insert(std::move(row));
        }
    }

    // Pivot rows led by a normal column span the relations; reduce them fully.
    std::vector<int> leads;
    for (const auto &[lead, row] : pivots)
        if (p.is_normal(order[lead]))
            leads.push_back(lead);
    for (auto it = leads.rbegin(); it != leads.rend(); ++it) {
        const SparseRow &pivot = pivots.at(*it);
        for (int other : leads) {
            if (other == *it)
                continue;
            SparseRow &row = pivots.at(other);
            auto hit = row.find(*it);
            if (hit == row.end())
                continue;
            const GaussRat f = hit->second;
            for (const auto &[c, v] : pivot) {
                auto [slot, inserted] = row.try_emplace(c, -(f * v));
                if (!inserted) {
                    slot->second -= f * v;
                    if (slot->second.is_zero())
                        row.erase(slot);
                }
            }
        }
    }
    std::vector<Relation> out;
    for (int lead : leads) {
        Relation r;
        for (const auto &[c, v] : pivots.at(lead))
            r.emplace(order[c], v);
        out.push_back(std::move(r));
    }
    return out;
}

void add_unique(std::vector<WordSum> &set, WordSum s) {
    if (std::find(set.begin(), set.end(), s) == set.end())
        set.push_back(std::move(s));
}

struct Explorer {
    const Presentation &p;
    std::size_t limit;
    std::map<Word, std::vector<WordSum>> memo;
    std::set<Word> on_stack;

    const std::vector<WordSum> &forms(const Word &w) {
        if (auto it = memo.find(w); it != memo.end())
            return it->second;
        if (!on_stack.insert(w).second)
            throw Diverged("rewrite cycle through " + word_text(p, w));
        std::vector<WordSum> result;
        if (p.is_normal(w)) {
            WordSum s;
            s.emplace(w, QExact(1));
            result.push_back(std::move(s));
        }
        for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
            if (!p.rule_for(w[pos], w[pos + 1]))
                continue;
            std::vector<WordSum> partial{WordSum{}};
            for (const auto &[next, c] : rewrite_at(p, w, pos)) {
                const auto &options = forms(next);
                std::vector<WordSum> grown;
                for (const auto &base : partial)
                    for (const auto &opt : options) {
                        WordSum s = base;
                        for (const auto &[u, d] : opt)
                            accumulate(s, u, c * d);
                        add_unique(grown, std::move(s));
                    }
                if (grown.size() > limit)
                    throw Diverged("more than " + std::to_string(limit) + " normal forms");
                partial = std::move(grown);
            }
            for (auto &s : partial)
                add_unique(result, std::move(s));
            if (result.size() > limit)
                throw Diverged("more than " + std::to_string(limit) + " normal forms");
        }
        on_stack.erase(w);
        return memo.emplace(w, std::move(result)).first->second;
    }
};

} // namespace

std::vector<WordSum> reachable_normal_forms(const Presentation &p, const Word &w,
                                            std::size_t limit) {
    Explorer e{p, limit, {}, {}};
    return e.forms(w);
}

FlatnessReport flatness_scan(const PresentationPtr &p, int max_degree,
                             const FlatnessOptions &options) {
    if (max_degree < 1 || max_degree > 8)
        throw InvalidArgument("max_degree must lie in [1, 8]");
    const auto words = all_words(p->size(), max_degree, options.max_words);

    const auto first = eliminate(*p, words, options.sample_s);
    FlatnessReport report;
    report.presentation = p->name();
    report.max_degree = max_degree;
    if (p->q_independent()) {
        report.certification = "exact";
    } else {
        const auto second = eliminate(*p, words, options.check_s);
        report.certification = first == second ? "q-independent" : "sampled";
    }

    for (int d = 1; d <= max_degree; ++d) {
        DegreeReport dr;
        dr.degree = d;
        for (const auto &w : words)
            if (static_cast<int>(w.size()) == d && p->is_normal(w))
                ++dr.normal_monomials;
        for (const auto &rel : first) {
            std::size_t lead_degree = 0;
            for (const auto &[w, c] : rel)
                lead_degree = std::max(lead_degree, w.size());
            if (static_cast<int>(lead_degree) != d)
                continue;
            WordSum terms;
            for (const auto &[w, c] : rel)
                terms.emplace(w, QExact(c));
            dr.relations.emplace_back(p, terms);
        }
        dr.independent = dr.normal_monomials - std::min(dr.normal_monomials, dr.relations.size());
        report.degrees.push_back(std::move(dr));
    }

    if (options.brute_force) {
        Explorer e{*p, 64, {}, {}};
        for (auto &dr : report.degrees) {
            dr.confluence = Confluence::Confluent;
            try {
                for (const auto &w : words) {
                    if (static_cast<int>(w.size()) != dr.degree)
                        continue;
                    if (e.forms(w).size() != 1) {
                        dr.confluence = Confluence::NonConfluent;
                        break;
                    }
                }
            } catch (const Diverged &) {
                dr.confluence = Confluence::NonTerminating;
                e.on_stack.clear();
            }
        }
    }
    return report;
}

} // namespace qlat::nc
