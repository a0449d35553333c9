#pragma once

#include <string>
#include <vector>

#include "spinh/clifford_homs.hpp"

namespace spinh {

/// S^q (x) V with the basis monomial-major: index = monomial * dim(V) + fiber.
/// The fiber is borrowed; it must outlive the space (typically it lives in a
/// CliffordHomFamily).
struct SectionSpace {
  int n = 0;
  int q = 0;
  const GeneratorRep* fiber = nullptr;

  Index fiber_dim() const { return fiber->dim; }
  Index dim() const;
  /// Fischer (x) fiber Gram matrix, diagonal.
  RealVec gram() const;
  /// Tensor action of [e_i, e_j], pair_index order.
  std::vector<SpMat> action() const;
  bool same_as(const SectionSpace& o) const { return q == o.q && fiber == o.fiber; }
};

struct SectionOperator {
  SpMat matrix;
  SectionSpace domain;
  SectionSpace codomain;

  int order() const { return domain.q - codomain.q; }
};

SectionOperator operator+(const SectionOperator& a, const SectionOperator& b);
SectionOperator operator-(const SectionOperator& a, const SectionOperator& b);
SectionOperator operator*(cplx s, const SectionOperator& a);
/// a after b.
SectionOperator compose(const SectionOperator& a, const SectionOperator& b);
/// Adjoint for the Fischer inner products on domain and codomain.
SectionOperator fischer_adjoint(const SectionOperator& op);

SectionSpace rho_space(const CliffordHomFamily& f, int q);
SectionSpace lambda_space(const CliffordHomFamily& f, std::size_t k, int q);

/// sum_i x_i p_k(e_i): S^q (x) V_rho -> S^{q+1} (x) V_lambda_k
SectionOperator make_x(const CliffordHomFamily& f, std::size_t k, int q);
/// sum_i x_i p_k(e_i)^*: S^q (x) V_lambda_k -> S^{q+1} (x) V_rho
SectionOperator make_x_star(const CliffordHomFamily& f, std::size_t k, int q);
/// sum_i p_k(e_i) d/dx_i: S^q (x) V_rho -> S^{q-1} (x) V_lambda_k
SectionOperator make_D(const CliffordHomFamily& f, std::size_t k, int q);
/// -sum_i p_k(e_i)^* d/dx_i: S^q (x) V_lambda_k -> S^{q-1} (x) V_rho
SectionOperator make_D_star(const CliffordHomFamily& f, std::size_t k, int q);

/// -sum d^2/dx_i^2 on S^q (x) V, fiber identity.
SectionOperator make_laplacian(const SectionSpace& s);
SectionOperator make_r_squared(const SectionSpace& s);
SectionOperator make_euler(const SectionSpace& s);
SectionOperator make_identity(const SectionSpace& s);

/// Largest relative deviation of op pi_domain(g) - pi_codomain(g) op over generators g.
double verify_invariance(const SectionOperator& op);

struct IdentityCheck {
  std::string name;
  double deviation;
};

/// sum x*x = r^2, sum D*D = laplacian, sum D*x = -(n + euler), sum x*D = euler
/// on S^q (x) V_rho.
std::vector<IdentityCheck> contraction_identities(const CliffordHomFamily& f, int q);
/// sum m x*x = 0, sum m D*D = 0.
std::vector<IdentityCheck> weighted_identities(const CliffordHomFamily& f, int q);
/// [lap, D*] = 0, [lap, D] = 0, [lap, x] = -2D, [lap, x*] = 2D*, worst over k.
std::vector<IdentityCheck> laplacian_commutators(const CliffordHomFamily& f, int q);
/// sum m D*x = sum m x*D, and that operator commutes with the Laplacian.
std::vector<IdentityCheck> weighted_coincidence(const CliffordHomFamily& f, int q);

/// All of the above.
std::vector<IdentityCheck> operator_identities(const CliffordHomFamily& f, int q);

struct ScalarLevel {
  int k;
  Rational predicted;  // k (2q - 2k + n - 2)
  double computed;
  Index dim;           // computed eigenspace dimension
  Index expected_dim;  // dim H^{q-2k}
};
struct ScalarSpectrum {
  int n, q;
  std::vector<ScalarLevel> levels;
  double max_deviation;
  bool dims_match;
};
/// Eigen-decomposition of -r^2 laplacian on S^q, matched against k(2q-2k+n-2).
ScalarSpectrum scalar_spectral_check(int n, int q);

}  // namespace spinh
