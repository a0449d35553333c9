#include "spinh/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace spinh {

SpMat sparse_identity(Index n) {
  SpMat id(n, n);
  id.setIdentity();
  return id;
}

SpMat to_sparse(const Mat& m, double prune) {
  std::vector<Eigen::Triplet<cplx>> trips;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (std::abs(m(i, j)) > prune) trips.emplace_back(i, j, m(i, j));
  SpMat s(m.rows(), m.cols());
  s.setFromTriplets(trips.begin(), trips.end());
  return s;
}

SpMat kron(const SpMat& a, const SpMat& b) {
  std::vector<Eigen::Triplet<cplx>> trips;
  trips.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
  for (Index ka = 0; ka < a.outerSize(); ++ka)
    for (SpMat::InnerIterator ia(a, ka); ia; ++ia)
      for (Index kb = 0; kb < b.outerSize(); ++kb)
        for (SpMat::InnerIterator ib(b, kb); ib; ++ib)
          trips.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                             ia.value() * ib.value());
  SpMat out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

SpMat kron(const SpMat& a, const Mat& b, double prune) {
  std::vector<Eigen::Triplet<cplx>> nz;
  for (Index j = 0; j < b.cols(); ++j)
    for (Index i = 0; i < b.rows(); ++i)
      if (std::abs(b(i, j)) > prune) nz.emplace_back(i, j, b(i, j));
  std::vector<Eigen::Triplet<cplx>> trips;
  trips.reserve(static_cast<std::size_t>(a.nonZeros()) * nz.size());
  for (Index ka = 0; ka < a.outerSize(); ++ka)
    for (SpMat::InnerIterator ia(a, ka); ia; ++ia)
      for (const auto& t : nz)
        trips.emplace_back(ia.row() * b.rows() + t.row(), ia.col() * b.cols() + t.col(),
                           ia.value() * t.value());
  SpMat out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_abs(const SpMat& m) {
  double best = 0.0;
  for (Index k = 0; k < m.outerSize(); ++k)
    for (SpMat::InnerIterator it(m, k); it; ++it) best = std::max(best, std::abs(it.value()));
  return best;
}

double relative_deviation(const SpMat& lhs, const SpMat& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw std::invalid_argument("relative_deviation: shape mismatch");
  SpMat diff = lhs - rhs;
  return max_abs(diff) / std::max({1.0, max_abs(lhs), max_abs(rhs)});
}

double relative_deviation(const Mat& lhs, const Mat& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw std::invalid_argument("relative_deviation: shape mismatch");
  return max_abs(Mat(lhs - rhs)) / std::max({1.0, max_abs(lhs), max_abs(rhs)});
}

Mat null_space(const Mat& a, double tol) {
  const Index n = a.cols();
  if (a.rows() == 0 || n == 0) return Mat::Identity(n, n);
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double thresh = tol * std::max(s.size() ? s(0) : 0.0, 1.0);
  Index r = 0;
  while (r < s.size() && s(r) > thresh) ++r;
  return svd.matrixV().rightCols(n - r);
}

Mat range_basis(const Mat& a, double tol, double scale) {
  if (a.cols() == 0 || a.rows() == 0) return Mat(a.rows(), 0);
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double ref = scale > 0.0 ? std::max(scale, 1.0) : std::max(s(0), 1.0);
  const double thresh = tol * ref;
  Index r = 0;
  while (r < s.size() && s(r) > thresh) ++r;
  return svd.matrixU().leftCols(r);
}

Index numerical_rank(const Mat& a, double tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(a);
  const auto& s = svd.singularValues();
  const double thresh = tol * std::max(s(0), 1.0);
  Index r = 0;
  while (r < s.size() && s(r) > thresh) ++r;
  return r;
}

Mat orthonormal_complement(const Mat& basis, const Mat& cand, double tol) {
  if (cand.cols() == 0) return Mat(cand.rows(), 0);
  const double scale = cand.colwise().norm().maxCoeff();
  Mat res = cand;
  if (basis.cols() > 0) {
    // two passes of classical Gram-Schmidt
    res -= basis * (basis.adjoint() * res);
    res -= basis * (basis.adjoint() * res);
  }
  return range_basis(res, tol, scale);
}

double max_principal_angle(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) return std::numbers::pi / 2;
  if (a.cols() == 0) return 0.0;
  Mat resid = b - a * (a.adjoint() * b);
  Eigen::JacobiSVD<Mat> svd(resid);
  const double s = std::min(1.0, svd.singularValues()(0));
  return std::asin(s);
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  Mat out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

}  // namespace spinh
