#include "cohrep/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

namespace cohrep {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CMatrix expm(const CMatrix& a) { return a.exp(); }

CMatrix null_space(const CMatrix& a, double rel_tol) {
    const Eigen::Index n = a.cols();
    if (a.rows() == 0) {
        return CMatrix::Identity(n, n);
    }
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
    const RVector& s = svd.singularValues();
    const double smax = s.size() > 0 ? s(0) : 0.0;
    const double cut = rel_tol * std::max(1.0, smax);
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k) {
        if (s(k) > cut) {
            ++rank;
        }
    }
    return svd.matrixV().rightCols(n - rank);
}

RMatrix real_null_space(const RMatrix& a, double rel_tol) {
    const Eigen::Index n = a.cols();
    if (a.rows() == 0) {
        return RMatrix::Identity(n, n);
    }
    Eigen::JacobiSVD<RMatrix> svd(a, Eigen::ComputeFullV);
    const RVector& s = svd.singularValues();
    const double smax = s.size() > 0 ? s(0) : 0.0;
    const double cut = rel_tol * std::max(1.0, smax);
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k) {
        if (s(k) > cut) {
            ++rank;
        }
    }
    return svd.matrixV().rightCols(n - rank);
}

CVector orthogonalize_against(CVector& v, const std::vector<CVector>& basis) {
    CVector coeffs = CVector::Zero(static_cast<Eigen::Index>(basis.size()));
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const Complex c = basis[k].dot(v);
            coeffs(static_cast<Eigen::Index>(k)) += c;
            v -= c * basis[k];
        }
    }
    return coeffs;
}

void fix_phase_first_nonzero(CVector& v, double tol) {
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        const double m = std::abs(v(k));
        if (m > tol) {
            v *= std::conj(v(k)) / m;
            v(k) = Complex(m, 0.0);
            return;
        }
    }
}

int numerical_rank(const RVector& singular_values, double rel_tol, double abs_tol) {
    if (singular_values.size() == 0) {
        return 0;
    }
    const double smax = singular_values.maxCoeff();
    if (smax <= abs_tol) {
        return 0;
    }
    const double cut = std::max(rel_tol * smax, abs_tol);
    int rank = 0;
    for (Eigen::Index k = 0; k < singular_values.size(); ++k) {
        if (singular_values(k) > cut) {
            ++rank;
        }
    }
    return rank;
}

}  // namespace cohrep
