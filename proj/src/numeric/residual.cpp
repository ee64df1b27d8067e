#include "qlat/numeric/residual.hpp"

#include <algorithm>

namespace qlat::num {

Relation &Relation::add(cplx c, const CMat &a, const CMat &b) {
    const Eigen::MatrixXd mag = std::abs(c) * (a.cwiseAbs() * b.cwiseAbs());
    accumulate(c * (a * b), mag);
    return *this;
}

Relation &Relation::add(cplx c, const CMat &a) {
    accumulate(c * a, std::abs(c) * a.cwiseAbs());
    return *this;
}

void Relation::accumulate(const CMat &value, const Eigen::MatrixXd &magnitude) {
    if (defect_.size() == 0) {
        defect_ = value;
        scale_ = magnitude;
    } else {
        defect_ += value;
        scale_ += magnitude;
    }
}

namespace {

template <class F> double block_max(Eigen::Index n, const std::vector<Eigen::Index> &keep, F f) {
    double out = 0;
    if (keep.empty()) {
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                out = std::max(out, f(i, j));
    } else {
        for (auto i : keep)
            for (auto j : keep)
                out = std::max(out, f(i, j));
    }
    return out;
}

} // namespace

double absolute_residual(const Relation &r, const std::vector<Eigen::Index> &keep) {
    return block_max(r.defect().rows(), keep,
                     [&](Eigen::Index i, Eigen::Index j) { return std::abs(r.defect()(i, j)); });
}

double relative_residual(const Relation &r, const std::vector<Eigen::Index> &keep) {
    return block_max(r.defect().rows(), keep, [&](Eigen::Index i, Eigen::Index j) {
        const double s = r.scale()(i, j);
        return s > 0 ? std::abs(r.defect()(i, j)) / s : 0.0;
    });
}

double max_abs(const CMat &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

CMat kron(const CMat &a, const CMat &b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

} // namespace qlat::num
