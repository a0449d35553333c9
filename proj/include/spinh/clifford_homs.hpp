#pragma once

#include <span>
#include <vector>

#include "spinh/reps.hpp"

namespace spinh {

/// One summand V_lambda of V_rho (x) R^n together with its Clifford
/// homomorphism p(e_i) = Pi_lambda(. (x) e_i), expressed in an orthonormal
/// basis of V_lambda.
struct HomComponent {
  DominantWeight lambda;
  Rational conformal_weight;
  std::vector<Mat> p;   // p[i-1] = p(e_i), dim(lambda) x dim(rho)
  GeneratorRep rep;     // pi_lambda in the same basis
  Mat basis;            // orthonormal columns inside V_rho (x) C^n
};

struct CliffordHomFamily {
  int n = 0;
  DominantWeight rho;
  GeneratorRep rho_rep;  // orthonormal
  std::vector<HomComponent> components;  // lambda_0 > lambda_1 > ...

  Index rho_dim() const { return rho_rep.dim; }
  /// p_k(u) = sum_i u_i p_k(e_i)
  Mat p_of(std::size_t k, const Vec& u) const;
};

/// Decomposes V_rho (x) C^n and projects. Throws NumericalError if the
/// computed components disagree with tensor_vector_components(rho).
CliffordHomFamily build_family(const GeneratorRep& rho_rep, double tol = kDefaultTol);

/// pi_rho([u, v]) = sum_{a,b} u_a v_b pi_rho([e_a, e_b]).
Mat bracket_action(const GeneratorRep& rep, const RealVec& u, const RealVec& v);

/// r^q(u, v) for q in {0, 1, 2}:
///   q=0: <u,v> Id,  q=1: -1/4 pi([u,v]),  q=2: 1/16 sum_l pi([u,e_l]) pi([e_l,v]).
Mat r_q_endo(const GeneratorRep& rho_rep, int q, const RealVec& u, const RealVec& v);

/// max_{i,j} |sum_k m_k^q p_k(e_j)^* p_k(e_i) - r^q(e_j, e_i)|
double verify_completeness(const CliffordHomFamily& f, int q);

/// p([[e_a,e_b], e_c]) against pi_lambda([e_a,e_b]) p(e_c) - p(e_c) pi_rho([e_a,e_b]),
/// with the left bracket evaluated in the Clifford algebra.
double verify_equivariance(const CliffordHomFamily& f);

/// p(g u g^{-1}) against pi_lambda(g) p(u) pi_rho(g^{-1}) for g = exp(t [e_a,e_b]),
/// with g u g^{-1} evaluated in the Clifford algebra.
double verify_group_equivariance(const CliffordHomFamily& f, std::span<const double> ts);

/// |c|^2 where p_k(e_i) = c * T g_i T^* for the repeated spinor component
/// (rho = lambda = Delta). Returns a negative value when that component is absent.
double spinor_self_scale(const CliffordHomFamily& f);

}  // namespace spinh
