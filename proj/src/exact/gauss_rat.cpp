#include "qlat/exact/gauss_rat.hpp"

#include "qlat/error.hpp"

namespace qlat {

GaussRat::GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussRat GaussRat::ratio(long num, long den) {
    if (den == 0)
        throw InvalidArgument("zero denominator");
    return GaussRat(mpq_class(num, den));
}

GaussRat GaussRat::inverse() const {
    if (is_zero())
        throw UnsupportedInverse("inverse of zero");
    const mpq_class norm = re_ * re_ + im_ * im_;
    return GaussRat(re_ / norm, -im_ / norm);
}

GaussRat &GaussRat::operator+=(const GaussRat &o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat &GaussRat::operator-=(const GaussRat &o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat &GaussRat::operator*=(const GaussRat &o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRat &GaussRat::operator/=(const GaussRat &o) { return *this *= o.inverse(); }

namespace detail {

std::string rational_text(const mpq_class &v, bool parenthesize_fraction) {
    if (v.get_den() == 1)
        return v.get_num().get_str();
    std::string s = v.get_num().get_str() + "/" + v.get_den().get_str();
    return parenthesize_fraction ? "(" + s + ")" : s;
}

} // namespace detail

std::pair<bool, GaussRat> GaussRat::sign_split() const {
    if (is_real() && sgn(re_) < 0)
        return {true, -*this};
    if (sgn(re_) == 0 && sgn(im_) < 0)
        return {true, -*this};
    return {false, *this};
}

std::string GaussRat::factor_text(bool followed) const {
    using detail::rational_text;
    if (is_real()) {
        if (followed && re_ == 1)
            return "";
        return rational_text(re_, followed);
    }
    if (sgn(re_) == 0) {
        if (im_ == 1)
            return "i";
        return rational_text(im_, true) + "*i";
    }
    const bool neg_im = sgn(im_) < 0;
    const mpq_class mag = neg_im ? mpq_class(-im_) : im_;
    std::string im_part = mag == 1 ? "i" : rational_text(mag, false) + "*i";
    return "(" + rational_text(re_, false) + (neg_im ? " - " : " + ") + im_part + ")";
}

std::string GaussRat::to_string() const {
    if (is_zero())
        return "0";
    auto [neg, mag] = sign_split();
    return (neg ? "-" : "") + mag.factor_text(false);
}

} // namespace qlat
