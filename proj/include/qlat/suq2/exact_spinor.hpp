#pragma once

#include "qlat/exact/qexact.hpp"

#include <string>
#include <vector>

namespace qlat::suq2 {

// Square matrix over QExact.
class QMatrix {
  public:
    explicit QMatrix(std::size_t n = 0) : n_(n), a_(n * n) {}
    std::size_t size() const noexcept { return n_; }
    QExact &operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const QExact &operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool is_zero() const;
    QMatrix dagger() const;
    friend QMatrix operator+(const QMatrix &a, const QMatrix &b);
    friend QMatrix operator-(const QMatrix &a, const QMatrix &b);
    friend QMatrix operator*(const QMatrix &a, const QMatrix &b);
    friend QMatrix operator*(const QExact &c, const QMatrix &a);
    friend bool operator==(const QMatrix &a, const QMatrix &b) { return a.a_ == b.a_; }

  private:
    std::size_t n_;
    std::vector<QExact> a_;
};

// The j = 1/2 representation with exact entries, basis (m = -1/2, m = +1/2).
struct ExactSpinor {
    QMatrix T3, Tp, Tm, tau, tau_half;
};

ExactSpinor exact_spinor();

struct SpinorCheck {
    QMatrix rel1, rel2, rel3;  // defects of the adopted relations
    QMatrix rel2_printed;      // relation 2 with T- on the right side
    QMatrix conj_t3, conj_tp;  // T3^dagger - T3, T+^dagger - q^-2 T-
    QMatrix tau_formula;       // tau - (1 - lambda T3)
    // Entries of the printed spinor table that disagree with the matrices,
    // e.g. "tau|1/2,1/2>: table q^2, computed q^(-2)".
    std::vector<std::string> table_mismatches;
    // dagger(relation 2) == -q^-2 relation 3 in the free algebra under
    // T3 -> T3, T+ -> q^-2 T-, T- -> q^2 T+.
    bool dagger_rel2_is_rel3 = false;

    bool relations_exact() const;
};

SpinorCheck check_spinor();

} // namespace qlat::suq2
