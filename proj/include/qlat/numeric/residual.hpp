#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace qlat::num {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;

// A matrix identity sum_k c_k A_k B_k = 0, kept term by term so the defect can
// be measured against the size of the individual terms.
class Relation {
  public:
    Relation &add(cplx c, const CMat &a, const CMat &b);
    Relation &add(cplx c, const CMat &a);

    const CMat &defect() const { return defect_; }
    // Entrywise sum_k |c_k| (|A_k| |B_k|).
    const Eigen::MatrixXd &scale() const { return scale_; }

  private:
    void accumulate(const CMat &value, const Eigen::MatrixXd &magnitude);
    CMat defect_;
    Eigen::MatrixXd scale_;
};

// Max entry of |defect| over the rows and columns listed in `keep` (all when
// empty).
double absolute_residual(const Relation &r, const std::vector<Eigen::Index> &keep = {});

// Max entry of |defect| / scale over the same block; entries with zero scale
// are skipped.
double relative_residual(const Relation &r, const std::vector<Eigen::Index> &keep = {});

double max_abs(const CMat &m);

// Kronecker product.
CMat kron(const CMat &a, const CMat &b);

} // namespace qlat::num
