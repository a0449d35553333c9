#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spinh/linalg.hpp"

namespace spinh {

/// Bitmask over basis vectors: bit (i-1) set means e_i is a factor.
using Blade = std::uint32_t;

inline constexpr int kMaxCliffordDim = 31;

/// Element of the Clifford algebra Cl_n with e_i e_i = -1 and e_i e_j = -e_j e_i.
///
/// Stored as a sparse map from blade to complex coefficient. Blade products
/// carry exact integer signs, so products of elements with exact coefficients
/// stay exact.
class CliffordElement {
 public:
  explicit CliffordElement(int n);

  static CliffordElement scalar(int n, cplx value);
  /// e_i, 1-based.
  static CliffordElement basis_vector(int n, int i);
  /// coeff * e_{i_1} ... e_{i_k}; indices must be strictly increasing.
  static CliffordElement blade(int n, const std::vector<int>& indices, cplx coeff = 1.0);
  /// sum_i v[i-1] e_i
  static CliffordElement vector(int n, const RealVec& v);

  int dim() const { return n_; }
  const std::map<Blade, cplx>& terms() const { return terms_; }
  cplx coeff(Blade b) const;
  cplx coeff(const std::vector<int>& indices) const;

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  CliffordElement& operator*=(cplx s);

  /// Drops terms with |coeff| <= tol.
  CliffordElement pruned(double tol = 0.0) const;
  CliffordElement grade(int k) const;
  /// Grade-1 coefficients as a length-n vector.
  Vec vector_part() const;

  bool approx_equal(const CliffordElement& o, double tol) const;
  /// Coefficient-wise equality after pruning exact zeros.
  bool operator==(const CliffordElement& o) const;

  std::string to_string() const;

 private:
  friend CliffordElement clifford_product(const CliffordElement& a, const CliffordElement& b);
  void add_term(Blade b, cplx c);

  int n_;
  std::map<Blade, cplx> terms_;
};

CliffordElement operator+(CliffordElement a, const CliffordElement& b);
CliffordElement operator-(CliffordElement a, const CliffordElement& b);
CliffordElement operator*(cplx s, CliffordElement a);
CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);

/// Sign of e_A e_B relative to e_{A xor B}, including e_i^2 = -1 contractions.
int blade_sign(Blade a, Blade b);

CliffordElement clifford_product(const CliffordElement& a, const CliffordElement& b);
CliffordElement commutator(const CliffordElement& a, const CliffordElement& b);

/// [e_i, e_j] = e_i e_j - e_j e_i, 1-based with 1 <= i < j <= n.
CliffordElement generator(int i, int j, int n);

/// Power-series exponential; meant for elements of moderate norm.
CliffordElement exp(const CliffordElement& a);

/// Number of generators [e_i, e_j] with i < j.
int pair_count(int n);
/// Position of (i, j), 1-based i < j, in the ordering (1,2), (1,3), ..., (n-1,n).
int pair_index(int n, int i, int j);
std::pair<int, int> pair_at(int n, int index);

/// Coordinates of a pure bivector in the generator basis {[e_i,e_j]}_{i<j}.
/// Throws if the element has components outside grade 2.
Vec generator_coordinates(const CliffordElement& bivector, double tol = 1e-12);

}  // namespace spinh
