#pragma once

#include <complex>
#include <gmpxx.h>
#include <string>
#include <utility>

namespace qlat {

// Gaussian rational re + i*im with exact GMP rationals.
class GaussRat {
  public:
    GaussRat() = default;
    GaussRat(long v) : re_(v), im_(0) {}
    GaussRat(mpq_class re, mpq_class im = 0);
    static GaussRat i() { return GaussRat(0, 1); }
    static GaussRat ratio(long num, long den);

    const mpq_class &re() const noexcept { return re_; }
    const mpq_class &im() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    GaussRat inverse() const;
    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat &operator+=(const GaussRat &o);
    GaussRat &operator-=(const GaussRat &o);
    GaussRat &operator*=(const GaussRat &o);
    GaussRat &operator/=(const GaussRat &o);
    friend GaussRat operator+(GaussRat a, const GaussRat &b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat &b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat &b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat &b) { return a /= b; }
    friend bool operator==(const GaussRat &a, const GaussRat &b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    // Splits off a leading sign for real or pure-imaginary values; general
    // complex values are never split.
    std::pair<bool, GaussRat> sign_split() const;
    // Text of a sign-split magnitude. When `followed` is set the value will be
    // multiplied by a further factor: fractions get parentheses and a unit
    // coefficient renders empty.
    std::string factor_text(bool followed) const;
    // "3", "-1/2", "i", "(2/3)*i", "(1 - 2*i)"
    std::string to_string() const;

  private:
    mpq_class re_{0};
    mpq_class im_{0};
};

namespace detail {
std::string rational_text(const mpq_class &v, bool parenthesize_fraction);
}

} // namespace qlat
