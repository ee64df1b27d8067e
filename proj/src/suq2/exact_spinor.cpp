#include "qlat/suq2/exact_spinor.hpp"

#include "qlat/error.hpp"
#include "qlat/ncalg/ncpoly.hpp"
#include "qlat/ncalg/parser.hpp"

#include <algorithm>

namespace qlat::suq2 {

bool QMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const QExact &c) { return c.is_zero(); });
}

QMatrix QMatrix::dagger() const {
    QMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            out(i, j) = (*this)(j, i).conj();
    return out;
}

QMatrix operator+(const QMatrix &a, const QMatrix &b) {
    if (a.n_ != b.n_)
        throw InvalidArgument("matrix size mismatch");
    QMatrix out = a;
    for (std::size_t k = 0; k < out.a_.size(); ++k)
        out.a_[k] += b.a_[k];
    return out;
}

QMatrix operator-(const QMatrix &a, const QMatrix &b) { return a + QExact(-1) * b; }

QMatrix operator*(const QMatrix &a, const QMatrix &b) {
    if (a.n_ != b.n_)
        throw InvalidArgument("matrix size mismatch");
    QMatrix out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
        for (std::size_t k = 0; k < a.n_; ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < a.n_; ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

QMatrix operator*(const QExact &c, const QMatrix &a) {
    QMatrix out = a;
    for (auto &v : out.a_)
        v = c * v;
    return out;
}

namespace {

QExact qp(int twice) { return QExact::q_pow(HalfInt::from_twice(twice)); }

QMatrix identity2() {
    QMatrix m(2);
    m(0, 0) = QExact(1);
    m(1, 1) = QExact(1);
    return m;
}

} // namespace

ExactSpinor exact_spinor() {
    // index 0: m = -1/2, index 1: m = +1/2
    ExactSpinor s{QMatrix(2), QMatrix(2), QMatrix(2), QMatrix(2), QMatrix(2)};
    s.T3(0, 0) = -qp(2);
    s.T3(1, 1) = qp(-2);
    s.Tp(1, 0) = qp(-2);
    s.Tm(0, 1) = qp(2);
    s.tau(0, 0) = qp(4);
    s.tau(1, 1) = qp(-4);
    s.tau_half(0, 0) = qp(2);
    s.tau_half(1, 1) = qp(-2);
    return s;
}

bool SpinorCheck::relations_exact() const {
    return rel1.is_zero() && rel2.is_zero() && rel3.is_zero() && conj_t3.is_zero() &&
           conj_tp.is_zero() && tau_formula.is_zero();
}

SpinorCheck check_spinor() {
    const ExactSpinor s = exact_spinor();
    const QExact q = QExact::q(), qi = q.inverse(), q2 = q * q, q2i = q2.inverse();
    const QExact qsum = q + qi;
    SpinorCheck c;
    c.rel1 = qi * (s.Tp * s.Tm) - q * (s.Tm * s.Tp) - s.T3;
    c.rel2 = q2 * (s.T3 * s.Tp) - q2i * (s.Tp * s.T3) - qsum * s.Tp;
    c.rel3 = q2i * (s.T3 * s.Tm) - q2 * (s.Tm * s.T3) + qsum * s.Tm;
    c.rel2_printed = q2 * (s.T3 * s.Tp) - q2i * (s.Tp * s.T3) - qsum * s.Tm;
    c.conj_t3 = s.T3.dagger() - s.T3;
    c.conj_tp = s.Tp.dagger() - q2i * s.Tm;
    c.tau_formula = s.tau - (identity2() - lambda_sym() * s.T3);

    // operator, column m, row m, printed coefficient
    struct Entry {
        const char *op;
        int col, row;
        QExact value;
    };
    const std::vector<Entry> table{
        {"T+", 0, 1, qi},  {"T+", 1, 1, QExact()}, {"T-", 0, 0, QExact()}, {"T-", 1, 0, q},
        {"T3", 0, 0, -q},  {"T3", 1, 1, qi},       {"tau", 1, 1, q2},       {"tau", 0, 0, q2i},
    };
    for (const auto &e : table) {
        const QMatrix &m = std::string(e.op) == "T+"   ? s.Tp
                           : std::string(e.op) == "T-" ? s.Tm
                           : std::string(e.op) == "T3" ? s.T3
                                                       : s.tau;
        const QExact &got = m(static_cast<std::size_t>(e.row), static_cast<std::size_t>(e.col));
        if (!(got == e.value))
            c.table_mismatches.push_back(std::string(e.op) + "|1/2," + (e.col ? "1/2" : "-1/2") +
                                         ">: table " + e.value.to_string() + ", computed " +
                                         got.to_string());
    }

    const auto free = nc::Presentation::free("sUq2-free", {"T3", "Tp", "Tm"});
    const auto rel2 = nc::parse_expr("q^2*T3*Tp - q^(-2)*Tp*T3 - (q + q^(-1))*Tp", free);
    const auto rel3 = nc::parse_expr("q^(-2)*T3*Tm - q^2*Tm*T3 + (q + q^(-1))*Tm", free);
    const std::vector<nc::NCPoly> images{nc::parse_expr("T3", free),
                                         nc::parse_expr("q^(-2)*Tm", free),
                                         nc::parse_expr("q^2*Tp", free)};
    c.dagger_rel2_is_rel3 =
        nc::check_identity(nc::anti_involution(rel2, images), nc::parse_expr("-q^(-2)", free) * rel3);
    return c;
}

} // namespace qlat::suq2
