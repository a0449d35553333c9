#pragma once

#include <map>
#include <memory>
#include <vector>

#include "spinh/linalg.hpp"

namespace spinh {

/// Monomials of total degree q in n variables, ordered lexicographically
/// descending by exponent vector (x_1^q first).
class MonomialBasis {
 public:
  MonomialBasis(int n, int q);

  int n() const { return n_; }
  int degree() const { return q_; }
  Index size() const { return static_cast<Index>(exps_.size()); }
  const std::vector<int>& exponents(Index i) const { return exps_[static_cast<std::size_t>(i)]; }
  /// -1 when the exponent vector is not in this basis.
  Index index_of(const std::vector<int>& exps) const;
  /// Squared Fischer norm alpha! of the i-th monomial.
  double fischer_norm_sq(Index i) const;

 private:
  int n_, q_;
  std::vector<std::vector<int>> exps_;
  std::map<std::vector<int>, Index> index_;
};

/// Shared, cached basis. Degrees below zero give an empty basis.
std::shared_ptr<const MonomialBasis> monomials(int n, int q);
Index monomial_count(int n, int q);

/// Multiplication by x_i (1-based), S^q -> S^{q+1}.
SpMat multiply_by(int n, int q, int i);
/// d/dx_i (1-based), S^q -> S^{q-1}.
SpMat differentiate(int n, int q, int i);
/// Laplacian with the sign convention -sum d^2/dx_i^2, S^q -> S^{q-2}.
SpMat laplacian(int n, int q);
/// Multiplication by r^2 = sum x_i^2, S^q -> S^{q+2}.
SpMat r_squared(int n, int q);
/// Diagonal Fischer Gram matrix on S^q.
RealVec fischer_norms(int n, int q);

}  // namespace spinh
