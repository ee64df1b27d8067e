#include "qlat/ncalg/ncpoly.hpp"

#include "qlat/error.hpp"

#include <algorithm>

namespace qlat::nc {

NCPoly::NCPoly(PresentationPtr p) : pres_(std::move(p)) {
    if (!pres_)
        throw InvalidArgument("null presentation");
}

NCPoly::NCPoly(PresentationPtr p, const WordSum &terms, std::size_t budget) : NCPoly(std::move(p)) {
    for (const auto &[w, c] : terms)
        for (auto g : w)
            if (g >= pres_->size())
                throw InvalidArgument("word refers to unknown generator");
    terms_ = normal_form(*pres_, terms, budget);
}

NCPoly NCPoly::scalar(PresentationPtr p, const QExact &c) {
    NCPoly r(std::move(p));
    accumulate(r.terms_, Word{}, c);
    return r;
}

NCPoly NCPoly::generator(PresentationPtr p, const std::string &name) {
    const auto g = p->index_of(name);
    if (!g)
        throw InvalidArgument("unknown generator '" + name + "' in presentation " + p->name());
    return word(std::move(p), Word{*g});
}

NCPoly NCPoly::word(PresentationPtr p, const Word &w, const QExact &c) {
    WordSum t;
    accumulate(t, w, c);
    return NCPoly(std::move(p), t);
}

std::size_t NCPoly::max_degree() const {
    std::size_t d = 0;
    for (const auto &[w, c] : terms_)
        d = std::max(d, w.size());
    return d;
}

std::vector<int> NCPoly::exponent_vector(const Word &w) const {
    std::vector<int> e(pres_->size(), 0);
    for (auto g : w)
        ++e[g];
    return e;
}

void NCPoly::require_same(const NCPoly &o) const {
    if (pres_ != o.pres_ && !(*pres_ == *o.pres_))
        throw InvalidArgument("polynomials belong to different presentations (" + pres_->name() +
                              ", " + o.pres_->name() + ")");
}

NCPoly NCPoly::operator-() const {
    NCPoly r(pres_);
    for (const auto &[w, c] : terms_)
        r.terms_.emplace(w, -c);
    return r;
}

NCPoly &NCPoly::operator+=(const NCPoly &o) {
    require_same(o);
    for (const auto &[w, c] : o.terms_)
        accumulate(terms_, w, c);
    return *this;
}

NCPoly &NCPoly::operator-=(const NCPoly &o) {
    require_same(o);
    for (const auto &[w, c] : o.terms_)
        accumulate(terms_, w, -c);
    return *this;
}

NCPoly operator*(const NCPoly &a, const NCPoly &b) {
    a.require_same(b);
    WordSum prod;
    for (const auto &[wa, ca] : a.terms_)
        for (const auto &[wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            accumulate(prod, w, ca * cb);
        }
    return NCPoly(a.pres_, prod);
}

NCPoly operator*(const QExact &c, const NCPoly &a) {
    NCPoly r(a.pres_);
    for (const auto &[w, d] : a.terms_)
        accumulate(r.terms_, w, c * d);
    return r;
}

NCPoly NCPoly::pow(unsigned e) const {
    NCPoly r = scalar(pres_, QExact(1));
    for (unsigned k = 0; k < e; ++k)
        r = r * *this;
    return r;
}

bool operator==(const NCPoly &a, const NCPoly &b) {
    a.require_same(b);
    return a.terms_ == b.terms_;
}

std::string word_text(const Presentation &p, const Word &w) {
    std::string out;
    for (std::size_t k = 0; k < w.size();) {
        std::size_t run = 1;
        while (k + run < w.size() && w[k + run] == w[k])
            ++run;
        if (!out.empty())
            out += "*";
        out += p.generator_name(w[k]);
        if (run > 1)
            out += "^" + std::to_string(run);
        k += run;
    }
    return out;
}

bool render_before(const Presentation &p, const Word &a, const Word &b) {
    std::vector<int> ea(p.size(), 0), eb(p.size(), 0);
    for (auto g : a)
        ++ea[g];
    for (auto g : b)
        ++eb[g];
    if (a.size() != b.size())
        return a.size() > b.size();
    const auto support = [](const std::vector<int> &e) {
        return std::count_if(e.begin(), e.end(), [](int k) { return k > 0; });
    };
    const auto sa = support(ea), sb = support(eb);
    if (sa != sb)
        return sa < sb;
    if (ea != eb)
        return ea > eb;
    return a > b;
}

std::string NCPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::vector<const WordSum::value_type *> order;
    for (const auto &t : terms_)
        order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [&](auto *a, auto *b) { return render_before(*pres_, a->first, b->first); });
    std::string out;
    bool first = true;
    for (const auto *t : order) {
        const auto &[w, c] = *t;
        bool neg = false;
        std::string body;
        if (w.empty()) {
            if (c.is_monomial()) {
                body = c.to_string();
                if (body.front() == '-') {
                    neg = true;
                    body.erase(0, 1);
                }
            } else {
                body = "(" + c.to_string() + ")";
            }
        } else {
            auto [n, f] = c.factor_text();
            neg = n;
            body = f.empty() ? word_text(*pres_, w) : f + "*" + word_text(*pres_, w);
        }
        if (first)
            out += (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

bool check_identity(const NCPoly &lhs, const NCPoly &rhs) { return (lhs - rhs).is_zero(); }

NCPoly anti_involution(const NCPoly &a, const std::vector<NCPoly> &images) {
    const auto &p = a.presentation();
    if (images.size() != p->size())
        throw InvalidArgument("anti-involution needs one image per generator");
    NCPoly out(p);
    for (const auto &[w, c] : a.terms()) {
        NCPoly term = NCPoly::scalar(p, c.conj());
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            term = term * images[*it];
        out += term;
    }
    return out;
}

} // namespace qlat::nc
