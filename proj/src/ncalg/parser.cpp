#include "qlat/ncalg/parser.hpp"

#include "qlat/error.hpp"

#include <cctype>

namespace qlat::nc {

namespace {

class Parser {
  public:
    Parser(const std::string &text, PresentationPtr p) : s_(text), p_(std::move(p)) {}

    NCPoly parse_all() {
        NCPoly v = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    long integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        if (pos_ - start > 15)
            fail("integer literal too long");
        return std::stol(s_.substr(start, pos_ - start));
    }

    NCPoly expr() {
        NCPoly v = term();
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    NCPoly term() {
        NCPoly v = unary();
        for (;;) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                NCPoly d = unary();
                v = invert_scalar(d, at) * v;
            } else {
                return v;
            }
        }
    }

    QExact invert_scalar(const NCPoly &d, std::size_t at) const {
        if (d.terms().size() != 1 || !d.terms().begin()->first.empty())
            throw ParseError("division by a non-scalar", at);
        const QExact &c = d.terms().begin()->second;
        if (!c.is_monomial())
            throw ParseError("division by a non-monomial scalar", at);
        return c.inverse();
    }

    NCPoly unary() {
        if (accept('-'))
            return -unary();
        return power();
    }

    NCPoly power() {
        const std::size_t base_at = pos_;
        NCPoly base = atom();
        if (!accept('^'))
            return base;
        skip();
        if (accept('(')) {
            const bool neg = accept('-');
            const long num = integer();
            long den = 1;
            if (accept('/'))
                den = integer();
            expect(')');
            if (den != 1 && den != 2)
                fail("exponent must be a half-integer");
            const long twice = (neg ? -1 : 1) * (den == 1 ? 2 * num : num);
            return scalar_power(base, twice, base_at);
        }
        const long e = integer();
        if (e > 64)
            fail("exponent too large");
        return base.pow(static_cast<unsigned>(e));
    }

    // base^(twice/2) for a scalar base.
    NCPoly scalar_power(const NCPoly &base, long twice, std::size_t at) const {
        if (twice >= 0 && twice % 2 == 0)
            return base.pow(static_cast<unsigned>(twice / 2));
        if (base.terms().size() != 1 || !base.terms().begin()->first.empty())
            throw ParseError("negative or fractional power of a non-scalar", at);
        const QExact &c = base.terms().begin()->second;
        if (twice % 2 == 0)
            return NCPoly::scalar(p_, c.pow(static_cast<int>(twice / 2)));
        if (!c.is_monomial() || !c.terms().begin()->second.is_one() ||
            (c.terms().begin()->first * twice) % 2 != 0)
            throw ParseError("fractional power is only defined for powers of q", at);
        return NCPoly::scalar(p_, QExact::s_pow(static_cast<int>(c.terms().begin()->first * twice / 2)));
    }

    NCPoly atom() {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NCPoly v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return NCPoly::scalar(p_, QExact(integer()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            const std::string id = s_.substr(start, pos_ - start);
            if (id == "q")
                return NCPoly::scalar(p_, QExact::q());
            if (id == "i")
                return NCPoly::scalar(p_, QExact::i());
            if (auto g = p_->index_of(id))
                return NCPoly::word(p_, Word{*g});
            throw ParseError("unknown identifier '" + id + "'", start);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string &s_;
    PresentationPtr p_;
    std::size_t pos_ = 0;
};

} // namespace

NCPoly parse_expr(const std::string &text, const PresentationPtr &p) {
    return Parser(text, p).parse_all();
}

RewriteRule parse_rule(const std::string &text, const std::vector<std::string> &generators) {
    const auto arrow = text.find("->");
    if (arrow == std::string::npos)
        throw ParseError("rule needs '->'", 0);
    const auto free = Presentation::free("rule", generators);
    const NCPoly lhs = parse_expr(text.substr(0, arrow), free);
    NCPoly rhs(free);
    try {
        rhs = parse_expr(text.substr(arrow + 2), free);
    } catch (const ParseError &e) {
        throw ParseError(std::string("in rule target: ") + e.what(), arrow + 2 + e.position());
    }
    if (lhs.terms().size() != 1 || lhs.terms().begin()->first.size() != 2 ||
        !lhs.terms().begin()->second.terms().begin()->second.is_one() ||
        !lhs.terms().begin()->second.is_constant())
        throw ParseError("rule left side must be a product of two generators", 0);
    const Word &w = lhs.terms().begin()->first;
    return RewriteRule{w[0], w[1], rhs.terms()};
}

} // namespace qlat::nc
