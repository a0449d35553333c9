#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace spinh {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;
using SpMat = Eigen::SparseMatrix<cplx>;
using Index = Eigen::Index;

/// Rank/kernel threshold: singular values below tol * max(largest, 1) count as zero.
inline constexpr double kDefaultTol = 1e-9;

/// Raised when a numerical check that must hold structurally does not
/// (leakage out of an invariant subspace, a decomposition that fails to
/// close, unmatched spectra).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SpMat sparse_identity(Index n);
SpMat to_sparse(const Mat& m, double prune = 0.0);

SpMat kron(const SpMat& a, const SpMat& b);
SpMat kron(const SpMat& a, const Mat& b, double prune = 0.0);

double max_abs(const Mat& m);
double max_abs(const SpMat& m);

/// max|lhs - rhs| / max(1, max|lhs|, max|rhs|).
double relative_deviation(const SpMat& lhs, const SpMat& rhs);
double relative_deviation(const Mat& lhs, const Mat& rhs);

/// Orthonormal basis of the kernel of a (columns).
Mat null_space(const Mat& a, double tol = kDefaultTol);
/// Orthonormal basis of the column span of a. Singular values are compared
/// against tol * max(scale, 1) when scale > 0, otherwise against the largest one.
Mat range_basis(const Mat& a, double tol = kDefaultTol, double scale = 0.0);
Index numerical_rank(const Mat& a, double tol = kDefaultTol);

/// Columns of cand orthogonalized against the orthonormal columns of basis,
/// returned as an orthonormal block (possibly empty).
Mat orthonormal_complement(const Mat& basis, const Mat& cand, double tol = kDefaultTol);

/// Largest principal angle (radians) between the spans of two orthonormal blocks
/// of equal width. Returns pi/2 when the widths differ.
double max_principal_angle(const Mat& a, const Mat& b);

Mat hstack(const Mat& a, const Mat& b);

}  // namespace spinh
