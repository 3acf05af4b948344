#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohrep {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A numerical step could not separate eigenvalues or vectors within tolerance.
class DegeneracyError : public Error {
  public:
    using Error::Error;
};

/// A configuration (group, subgroup, fiducial) outside the supported set.
class UnsupportedError : public Error {
  public:
    using Error::Error;
};

/// Frobenius norm of A - B.
inline double frobenius_distance(const CMatrix& a, const CMatrix& b) { return (a - b).norm(); }

/// Kronecker product a (x) b with row index i*b.rows()+j.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Matrix exponential (scaling and squaring with Pade approximant).
CMatrix expm(const CMatrix& a);

/// Orthonormal basis of the null space of `a`, columns ordered as returned by
/// the SVD. Singular values below `rel_tol * max(1, sigma_max)` count as zero.
CMatrix null_space(const CMatrix& a, double rel_tol = 1e-10);

/// Real null space of a real matrix.
RMatrix real_null_space(const RMatrix& a, double rel_tol = 1e-10);

/// Removes from `v` its components along the (orthonormal) columns of `basis`,
/// twice for stability. Returns the coefficients of the first pass plus the second.
CVector orthogonalize_against(CVector& v, const std::vector<CVector>& basis);

/// Multiplies `v` by a unit phase so that its first entry with modulus above
/// `tol` is real and positive.
void fix_phase_first_nonzero(CVector& v, double tol = 1e-10);

/// Numerical rank: number of singular values above max(rel_tol * sigma_max,
/// abs_tol); sigma_max <= abs_tol gives rank 0.
int numerical_rank(const RVector& singular_values, double rel_tol, double abs_tol = 0.0);

}  // namespace cohrep
