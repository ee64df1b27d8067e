#include "doctest.h"

#include "qlat/error.hpp"
#include "qlat/exact/qnumber.hpp"

#include <cmath>
#include <random>

using namespace qlat;

namespace {

const QExact q = QExact::q();
const QExact one(1);

QExact random_scalar(std::mt19937 &rng) {
    std::uniform_int_distribution<int> power(-4, 4), num(-5, 5), den(1, 4), len(0, 4);
    QExact out;
    for (int k = len(rng); k > 0; --k)
        out += QExact::s_pow(power(rng), GaussRat(mpq_class(num(rng), den(rng)),
                                                  mpq_class(num(rng), den(rng))));
    return out;
}

} // namespace

TEST_CASE("half integers") {
    CHECK(HalfInt::parse("3/2") == HalfInt::from_twice(3));
    CHECK(HalfInt::parse("-0.5") == HalfInt::from_twice(-1));
    CHECK(HalfInt::parse("2") == HalfInt::from_int(2));
    CHECK(HalfInt::from_twice(-1).to_string() == "-1/2");
    CHECK_THROWS_AS(HalfInt::parse("1/3"), InvalidArgument);
    CHECK_THROWS_AS(HalfInt::from_double(0.3), InvalidArgument);
}

TEST_CASE("ring operations and rendering") {
    CHECK((q - q.inverse()) * (q + q.inverse()) == q * q - q.pow(-2));
    CHECK((q * q + one).to_string() == "1 + q^2");
    CHECK((QExact::i() * q).conj() == -(QExact::i() * q));
    CHECK(QExact::s_pow(-1, GaussRat::ratio(1, 2) * GaussRat::i()).to_string() ==
          "(1/2)*i*q^(-1/2)");
    CHECK(lambda_sym().to_string() == "-q^(-1) + q");
    CHECK(QExact().to_string() == "0");
    CHECK_THROWS_AS((q + one).inverse(), UnsupportedInverse);
}

TEST_CASE("lambda") {
    CHECK(std::abs(lambda_sym().evaluate(1.5) - 5.0 / 6.0) < 1e-15);
    CHECK(std::abs(lambda_sym().evaluate(1.0)) == 0.0);
    CHECK(lambda_sym().conj() == lambda_sym());
}

TEST_CASE("q numbers") {
    CHECK(q_number(HalfInt::from_int(2), 2) == one + q * q);
    CHECK(q_number(HalfInt::from_int(-1), -2) == -(q * q));
    CHECK(q_number(HalfInt::from_int(0), 3).is_zero());
    for (int r = -4; r <= 4; ++r) {
        if (r == 0)
            continue;
        CHECK(q_number(HalfInt::from_int(1), r) == one);
        for (int n = -4; n <= 4; ++n) {
            const QExact qr = QExact::q_pow(HalfInt::from_int(r));
            const QExact qrn = QExact::q_pow(HalfInt::from_int(r * n));
            CHECK(q_number(HalfInt::from_int(n), r) * (one - qr) == one - qrn);
        }
    }
    CHECK_THROWS_AS(q_number(HalfInt::from_int(2), 0), InvalidArgument);
    CHECK_THROWS_AS(q_number(HalfInt::from_twice(3), 2), NonPolynomial);
    CHECK(q_number_value(1.5, 2, 1.0) == 1.5);
    CHECK(std::abs(q_number_value(1.5, 2, 1.5) - (1 + 1.5 + 2.25) / 2.5) < 1e-14);
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const QExact a = random_scalar(rng), b = random_scalar(rng);
        CHECK(a.conj().conj() == a);
        for (double q0 : {1.1, 1.5, 2.0}) {
            const auto lhs = (a * b).evaluate(q0);
            const auto rhs = a.evaluate(q0) * b.evaluate(q0);
            CHECK(std::abs(lhs - rhs) <= 1e-14 * std::max(1.0, std::abs(rhs)));
        }
    }
}
