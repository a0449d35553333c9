#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace spinh {

using Rational = boost::rational<long long>;
/// Arbitrary (not necessarily dominant) weight in orthogonal coordinates.
using WeightVector = std::vector<Rational>;

std::string to_string(const Rational& r);
std::string to_string(const WeightVector& w);
double to_double(const Rational& r);

/// Highest weight of an irreducible spin(n) representation, m = floor(n/2) entries.
///
/// Entries are all integers or all half-odd-integers. For n = 2m+1 they satisfy
/// w1 >= ... >= wm >= 0, for n = 2m they satisfy w1 >= ... >= w(m-1) >= |wm|.
class DominantWeight {
 public:
  DominantWeight(int n, WeightVector entries);

  static DominantWeight zero(int n);

  int n() const { return n_; }
  int rank() const { return static_cast<int>(entries_.size()); }
  const WeightVector& entries() const { return entries_; }
  const Rational& operator[](int i) const { return entries_.at(static_cast<std::size_t>(i)); }
  bool is_zero() const;
  bool half_integral() const;

  std::string to_string() const { return spinh::to_string(entries_); }

  bool operator==(const DominantWeight& o) const = default;
  /// Lexicographic on entries (n compared first).
  std::strong_ordering operator<=>(const DominantWeight& o) const;

 private:
  int n_;
  WeightVector entries_;
};

int weight_rank(int n);
bool is_dominant(int n, const WeightVector& w);
/// Strict lexicographic comparison of equal-length weight vectors.
bool lex_greater(const WeightVector& a, const WeightVector& b);

/// Parses "1/2,1/2" or "1,1,0". Throws std::invalid_argument on malformed
/// input, wrong length, mixed integrality or non-dominance.
DominantWeight parse_weight(int n, std::string_view text);

DominantWeight delta(int n);
DominantWeight harmonic_weight(int n, int q);
DominantWeight form_weight(int n, int p);
DominantWeight spinor_weight(int n);

Rational norm_sq(const WeightVector& w);
WeightVector add(const WeightVector& a, const WeightVector& b);

/// ||v + delta||^2 - ||delta||^2
Rational casimir_shift(const DominantWeight& v);
/// Scalar by which (1/64) sum_{i != j} pi([e_i,e_j])^2 acts on V_v.
Rational casimir_eigenvalue(const DominantWeight& v);
long long weyl_dim(const DominantWeight& v);

/// Highest weights of the components of V_rho (x) R^n, strictly decreasing.
std::vector<DominantWeight> tensor_vector_components(const DominantWeight& rho);

/// Conformal weight of V_lambda inside V_rho (x) R^n, normalized so that
/// sum_k m_k p_k(e_j)^* p_k(e_i) = -1/4 pi_rho([e_j, e_i]).
/// This gives m(rho + e_1) = -rho^1.
Rational conformal_weight(const DominantWeight& rho, const DominantWeight& lambda);

/// (q^2 + (n-2) q + ||rho+delta||^2 - ||mu+delta||^2) / 2
Rational m_mu_q(const DominantWeight& mu, const DominantWeight& rho, int q);
/// Eigenvalue q + m(mu,q)/rho^1 of the top-eliminated operator on V_mu; rho must be nonzero.
Rational e_eigenvalue(const DominantWeight& mu, const DominantWeight& rho, int q);

/// Eigenvalue of -r^2 Laplacian on r^{2k} H^{q-2k}, Laplacian = -sum d^2/dx_i^2.
Rational scalar_radial_eigenvalue(int n, int q, int k);

}  // namespace spinh
