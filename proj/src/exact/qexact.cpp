#include "qlat/exact/qexact.hpp"

#include "qlat/error.hpp"

#include <cmath>

namespace qlat {

QExact::QExact(const GaussRat &c) {
    if (!c.is_zero())
        terms_.emplace(0, c);
}

QExact QExact::s_pow(int k, const GaussRat &c) {
    QExact r;
    r.accumulate(k, c);
    return r;
}

GaussRat QExact::constant_term() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? GaussRat(0) : it->second;
}

void QExact::accumulate(int k, const GaussRat &c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

QExact QExact::conj() const {
    QExact r;
    for (const auto &[k, c] : terms_)
        r.terms_.emplace(k, c.conj());
    return r;
}

QExact QExact::inverse() const {
    if (!is_monomial())
        throw UnsupportedInverse("inverse of non-monomial scalar " + to_string());
    const auto &[k, c] = *terms_.begin();
    return s_pow(-k, c.inverse());
}

QExact QExact::pow(int e) const {
    if (e < 0)
        return inverse().pow(-e);
    QExact result(1);
    QExact base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

QExact QExact::operator-() const {
    QExact r;
    for (const auto &[k, c] : terms_)
        r.terms_.emplace(k, -c);
    return r;
}

QExact &QExact::operator+=(const QExact &o) {
    for (const auto &[k, c] : o.terms_)
        accumulate(k, c);
    return *this;
}

QExact &QExact::operator-=(const QExact &o) {
    for (const auto &[k, c] : o.terms_)
        accumulate(k, -c);
    return *this;
}

QExact operator*(const QExact &a, const QExact &b) {
    QExact r;
    for (const auto &[ka, ca] : a.terms_)
        for (const auto &[kb, cb] : b.terms_)
            r.accumulate(ka + kb, ca * cb);
    return r;
}

QExact &QExact::operator*=(const QExact &o) {
    *this = *this * o;
    return *this;
}

std::complex<double> QExact::evaluate(double q) const {
    if (!(q > 0.0))
        throw InvalidArgument("evaluation requires q > 0");
    const double s = std::sqrt(q);
    std::complex<double> sum = 0.0;
    for (const auto &[k, c] : terms_)
        sum += c.to_complex() * std::pow(s, k);
    return sum;
}

GaussRat QExact::evaluate_at_s(const GaussRat &s0) const {
    GaussRat sum(0);
    for (const auto &[k, c] : terms_) {
        GaussRat term = c;
        const GaussRat base = k < 0 ? s0.inverse() : s0;
        for (int n = 0; n < std::abs(k); ++n)
            term *= base;
        sum += term;
    }
    return sum;
}

std::string q_power_text(int s_power) {
    if (s_power == 0)
        return "";
    if (s_power % 2 == 0) {
        const int m = s_power / 2;
        if (m == 1)
            return "q";
        if (m > 0)
            return "q^" + std::to_string(m);
        return "q^(" + std::to_string(m) + ")";
    }
    return "q^(" + std::to_string(s_power) + "/2)";
}

namespace {

std::pair<bool, std::string> term_text(int k, const GaussRat &c) {
    auto [neg, mag] = c.sign_split();
    if (k == 0)
        return {neg, mag.factor_text(false)};
    const std::string f = mag.factor_text(true);
    const std::string qt = q_power_text(k);
    return {neg, f.empty() ? qt : f + "*" + qt};
}

} // namespace

std::string QExact::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[k, c] : terms_) {
        auto [neg, body] = term_text(k, c);
        if (first)
            out += (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::pair<bool, std::string> QExact::factor_text() const {
    if (terms_.empty())
        return {false, "0"};
    if (terms_.size() > 1)
        return {false, "(" + to_string() + ")"};
    const auto &[k, c] = *terms_.begin();
    auto [neg, mag] = c.sign_split();
    std::string f = mag.factor_text(true);
    const std::string qt = q_power_text(k);
    if (!qt.empty())
        f = f.empty() ? qt : f + "*" + qt;
    return {neg, f};
}

QExact lambda_sym() { return QExact::q() - QExact::s_pow(-2); }

} // namespace qlat
