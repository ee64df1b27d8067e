#include "doctest.h"

#include "qlat/error.hpp"
#include "qlat/ncalg/calculus.hpp"
#include "qlat/ncalg/flatness.hpp"
#include "qlat/ncalg/parser.hpp"
#include "qlat/ncalg/presets.hpp"

#include <random>

using namespace qlat;
using namespace qlat::nc;

namespace {

NCPoly P(const std::string &text, const PresentationPtr &p) { return parse_expr(text, p); }

long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

NCPoly random_poly(const PresentationPtr &p, std::mt19937 &rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), gen(0, static_cast<int>(p->size()) - 1),
        coef(-3, 3), spow(-2, 2), count(1, 3);
    WordSum terms;
    for (int t = count(rng); t > 0; --t) {
        Word w;
        for (int k = len(rng); k > 0; --k)
            w.push_back(static_cast<std::uint8_t>(gen(rng)));
        accumulate(terms, w, QExact::s_pow(spow(rng), GaussRat(coef(rng))));
    }
    return NCPoly(p, terms);
}

} // namespace

TEST_CASE("parser") {
    const auto m = manin_plane();
    CHECK(P("y*x", m) == P("(1/q)*x*y", m));
    CHECK(P("y*x", m).to_string() == "q^(-1)*x*y");
    CHECK(P("x*y - q*y*x", m).is_zero());
    CHECK(P("x^2*y", m).to_string() == "x^2*y");
    CHECK(P("x + y^2 + x*y + y", m).to_string() == "y^2 + x*y + x + y");
    CHECK(P("q^(-1/2)*x", m) == NCPoly::word(m, {0}, QExact::s_pow(-1)));
    CHECK(P("-(x + 2)/2", m) == P("-1 - (1/2)*x", m));
    CHECK(P("(x+y)^2", m) == P("x^2 + (1 + q^(-1))*x*y + y^2", m));
    CHECK_THROWS_AS(P("x*z", m), ParseError);
    CHECK_THROWS_AS(P("x/(1+q)", m), ParseError);
    CHECK_THROWS_AS(P("x*", m), ParseError);
    try {
        P("x + $", m);
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("normal forms") {
    const auto m = manin_plane();
    CHECK(P("y*x*y", m).to_string() == "q^(-1)*x*y^2");
    CHECK(P("x*y", m).to_string() == "x*y");
    const auto h = q_heisenberg();
    CHECK(P("p*x", h).to_string() == "q*x*p - i");
    CHECK_FALSE(check_identity(P("x*y", m), P("y*x", m)));
    CHECK_THROWS_AS(check_identity(P("x", m), P("x", h)), InvalidArgument);
}

TEST_CASE("normal form diverges on the cycling rule") {
    const auto c = counterexample_plane();
    CHECK_THROWS_AS(normal_form(*c, {{Word{1, 1, 0}, QExact(1)}}, 10'000), Diverged);
}

TEST_CASE("scaling operator identities") {
    const auto h = q_heisenberg();
    const NCPoly lambda = P("1 + i*(q - 1)*x*p", h);
    CHECK(check_identity(lambda * P("x", h), P("q*x", h) * lambda));
    CHECK(check_identity(lambda * P("p", h), P("q^(-1)*p", h) * lambda));
}

TEST_CASE("homomorphism property") {
    std::mt19937 rng(7);
    for (const auto &p : {manin_plane(), q_heisenberg(), wz_calculus(), suq2_algebra()}) {
        for (int trial = 0; trial < 40; ++trial) {
            const NCPoly a = random_poly(p, rng, 3), b = random_poly(p, rng, 3);
            WordSum raw;
            for (const auto &[wa, ca] : a.terms())
                for (const auto &[wb, cb] : b.terms()) {
                    Word w = wa;
                    w.insert(w.end(), wb.begin(), wb.end());
                    accumulate(raw, w, ca * cb);
                }
            CHECK(NCPoly(p, raw) == a * b);
        }
    }
}

TEST_CASE("alternative rewrite orders agree on flat presentations") {
    std::mt19937 rng(11);
    const RewriteStrategy rightmost = [](const Word &, const std::vector<std::size_t> &r) {
        return r.back();
    };
    for (const auto &p : {manin_plane(), q_heisenberg(), wz_calculus()}) {
        for (int trial = 0; trial < 30; ++trial) {
            const NCPoly a = random_poly(p, rng, 5);
            WordSum raw;
            for (const auto &[w, c] : a.terms())
                raw.emplace(w, c);
            CHECK(normal_form_with(*p, raw, rightmost) == normal_form(*p, raw));
        }
    }
}

TEST_CASE("flatness of the Manin plane and the q-Heisenberg algebra") {
    for (const auto &p : {manin_plane(), q_heisenberg()}) {
        const auto r = flatness_scan(p, 6);
        CHECK(r.flat());
        for (const auto &d : r.degrees) {
            CHECK(d.normal_monomials == static_cast<std::size_t>(d.degree + 1));
            CHECK(d.confluence == Confluence::Confluent);
        }
    }
    CHECK(flatness_scan(manin_plane(), 6).certification == "q-independent");
    CHECK(flatness_scan(suq2_algebra(), 4).flat());
}

TEST_CASE("flatness counts on three generators") {
    const auto r = flatness_scan(suq2_algebra(), 4);
    for (const auto &d : r.degrees)
        CHECK(d.normal_monomials == static_cast<std::size_t>(binomial(d.degree + 2, 2)));
}

TEST_CASE("counterexample yields the cubic relation") {
    const auto c = counterexample_plane();
    const auto r = flatness_scan(c, 3);
    CHECK(r.certification == "exact");
    CHECK(r.degrees[0].relations.empty());
    CHECK(r.degrees[1].relations.empty());
    REQUIRE(r.degrees[2].relations.size() == 1);
    const NCPoly expected(c, {{Word{0, 0, 0}, QExact(1)},
                              {Word{1, 1, 1}, QExact(1)},
                              {Word{0, 0, 1}, QExact(1)},
                              {Word{0, 1, 1}, QExact(1)}});
    CHECK(r.degrees[2].relations[0] == expected);
    CHECK(r.degrees[2].relations[0].to_string() == "x^3 + y^3 + x^2*y + x*y^2");
    CHECK(r.degrees[2].independent == 3);
    CHECK(r.degrees[2].confluence != Confluence::Confluent);
}

TEST_CASE("degree one has no relations") {
    for (const auto &name : preset_names()) {
        const auto p = preset(name);
        const auto r = flatness_scan(p, 1);
        CHECK(r.degrees[0].normal_monomials == p->size());
        CHECK(r.degrees[0].relations.empty());
    }
    CHECK_THROWS_AS(flatness_scan(manin_plane(), 9), InvalidArgument);
}

TEST_CASE("derivatives on the quantum plane") {
    const auto c = wz_calculus();
    CHECK(derivative_apply("dx", P("x", c)) == P("1", c));
    CHECK(derivative_apply("dx", P("x*y", c)) == P("q^2*y", c));
    CHECK(derivative_apply("dy", P("x", c)).is_zero());
    CHECK(derivative_apply("dy", P("y^2", c)) == P("(1 + q^2)*y", c));
    CHECK_THROWS_AS(derivative_apply("dx", P("dy*x", c)), InvalidArgument);
    CHECK_THROWS_AS(derivative_apply("x", P("x", c)), InvalidArgument);
}

TEST_CASE("Leibniz rule for dx") {
    const auto c = wz_calculus();
    const NCPoly x = P("x", c), y = P("y", c);
    const NCPoly q2 = P("q^2", c), ql = P("q^2 - 1", c);
    for (int d = 0; d <= 4; ++d)
        for (int a = 0; a <= d; ++a) {
            const NCPoly m = x.pow(a) * y.pow(d - a);
            const NCPoly lhs = derivative_apply("dx", x * m);
            const NCPoly rhs = m + q2 * x * derivative_apply("dx", m) +
                               ql * y * derivative_apply("dy", m);
            CHECK(check_identity(lhs, rhs));
        }
}

TEST_CASE("module action leaves the plane relation invariant") {
    const auto f = suq2_module_free_plane();
    const NCPoly g = P("x*y - q*y*x", f);
    for (const char *t : {"Tp", "Tm", "T3"}) {
        const NCPoly gen = P(t, f);
        CAPTURE(t);
        CHECK(check_identity(gen * g, g * gen));
    }
    const auto m = suq2_module();
    CHECK(check_identity(P("Tp*(x*y - q*y*x)", m), P("(x*y - q*y*x)*Tp", m)));
}

TEST_CASE("anti-involution reverses products") {
    const auto h = Presentation::free("free", {"x", "p"});
    const std::vector<NCPoly> images{P("x", h), P("q*p + x", h)};
    const NCPoly a = P("x*p + i*q", h), b = P("p^2 - x", h);
    CHECK(anti_involution(a * b, images) == anti_involution(b, images) * anti_involution(a, images));
}
