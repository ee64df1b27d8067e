#pragma once

#include "qlat/exact/gauss_rat.hpp"
#include "qlat/exact/half_int.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace qlat {

// Laurent polynomial in s = q^(1/2) with Gaussian-rational coefficients.
//
// Zero coefficients are never stored. q is real, so conjugation fixes s and
// conjugates the coefficients.
class QExact {
  public:
    using Terms = std::map<int, GaussRat>;

    QExact() = default;
    QExact(long c) : QExact(GaussRat(c)) {}
    QExact(const GaussRat &c);

    // c * s^k
    static QExact s_pow(int k, const GaussRat &c = GaussRat(1));
    // q^e with e in (1/2)Z
    static QExact q_pow(HalfInt e) { return s_pow(e.twice()); }
    static QExact q() { return s_pow(2); }
    static QExact i() { return QExact(GaussRat::i()); }

    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    // True for a nonzero value, or zero, without any s dependence.
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    GaussRat constant_term() const;

    QExact conj() const;
    // Only monomials c * s^k are invertible here.
    QExact inverse() const;
    QExact pow(int e) const;

    QExact operator-() const;
    QExact &operator+=(const QExact &o);
    QExact &operator-=(const QExact &o);
    QExact &operator*=(const QExact &o);
    friend QExact operator+(QExact a, const QExact &b) { return a += b; }
    friend QExact operator-(QExact a, const QExact &b) { return a -= b; }
    friend QExact operator*(const QExact &a, const QExact &b);
    friend bool operator==(const QExact &a, const QExact &b) { return a.terms_ == b.terms_; }

    // Numerical value at real q > 0.
    std::complex<double> evaluate(double q) const;
    // Exact value at s = s0 (s0 must be nonzero when negative powers occur).
    GaussRat evaluate_at_s(const GaussRat &s0) const;

    // Canonical text: ascending s-powers, powers printed in q.
    //   1 + q^2      (1/2)*i*q^(-1/2)      -q^(-1) + q
    std::string to_string() const;
    // Sign and text of this value used as a multiplicative factor, e.g. the
    // coefficient of a monomial. Unit values give an empty text; sums are
    // parenthesized.
    std::pair<bool, std::string> factor_text() const;

  private:
    void accumulate(int k, const GaussRat &c);
    Terms terms_;
};

// lambda = q - 1/q
QExact lambda_sym();

// Text for s^k written in q: "", "q", "q^2", "q^(-1)", "q^(1/2)".
std::string q_power_text(int s_power);

} // namespace qlat
