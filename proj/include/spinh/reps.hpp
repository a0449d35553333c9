#pragma once

#include <optional>
#include <vector>

#include "spinh/linalg.hpp"
#include "spinh/weights.hpp"

namespace spinh {

/// A finite-dimensional representation of spin(n) given by one matrix per
/// generator [e_i, e_j], i < j, together with the Hermitian inner product
/// (Gram matrix) that makes it unitary.
struct GeneratorRep {
  int n = 0;
  Index dim = 0;
  std::vector<SpMat> gens;  // pair_index order
  SpMat inner;
  bool orthonormal = true;  // inner is the identity
  std::optional<DominantWeight> label;

  /// pi([e_i, e_j]) for 1-based i < j.
  const SpMat& gen(int i, int j) const;
  /// pi([e_i, e_j]) for any 1-based i, j (antisymmetric, zero on the diagonal).
  SpMat action(int i, int j) const;
};

GeneratorRep trivial_rep(int n);
/// e_i -> 4 e_j, e_j -> -4 e_i under [e_i, e_j].
GeneratorRep vector_rep(int n);

/// Skew-Hermitian gamma matrices with g_i^2 = -1 and g_i g_j = -g_j g_i, n odd.
std::vector<Mat> gamma_matrices(int n);
GeneratorRep spinor_rep(int n);

/// Strictly increasing index subsets of size p of {1..n}, in lexicographic order.
std::vector<std::vector<int>> form_basis(int n, int p);
/// Exterior multiplication by e_i, Lambda^p -> Lambda^{p+1}, wedge basis.
SpMat wedge_matrix(int n, int p, int i);
/// Interior product with e_i, Lambda^p -> Lambda^{p-1}, wedge basis.
SpMat interior_matrix(int n, int p, int i);
GeneratorRep exterior_rep(int n, int p);

/// Polynomials of degree q in the monomial basis with the Fischer inner product.
GeneratorRep poly_rep(int n, int q);

struct HarmonicSpace {
  GeneratorRep rep;  // orthonormal coordinates
  Mat embedding;     // monomial coordinates of the basis, Fischer-orthonormal columns
};
HarmonicSpace harmonic_subspace(int n, int q, double tol = kDefaultTol);

GeneratorRep tensor_rep(const GeneratorRep& a, const GeneratorRep& b);

/// Columns orthonormal for rep.inner (identity when already orthonormal).
Mat orthonormal_frame(const GeneratorRep& rep);
GeneratorRep orthonormalized(const GeneratorRep& rep);
/// Restriction to an invariant subspace spanned by orthonormal columns;
/// throws NumericalError when the span is not invariant.
GeneratorRep restrict_rep(const GeneratorRep& rep, const Mat& basis, double tol = 1e-8);

/// (1/64) sum over ordered pairs i != j of pi([e_i,e_j])^2.
SpMat casimir(const GeneratorRep& rep);
double bracket_closure_deviation(const GeneratorRep& rep);
double unitarity_deviation(const GeneratorRep& rep);

struct WeightSpace {
  WeightVector weight;
  Mat basis;  // orthonormal
};
/// Joint eigenspaces of the Cartan generators H_j = pi([e_{2j-1}, e_{2j}]),
/// weights read as eigenvalue / 4i, sorted lexicographically descending.
std::vector<WeightSpace> cartan_weight_data(const GeneratorRep& rep, double tol = kDefaultTol);

struct Root {
  WeightVector root;
  Vec coeffs;  // over the generator basis, pair_index order
};
/// Positive roots with root vectors, read off from the adjoint action of the
/// Cartan span on the Clifford-algebra generators.
const std::vector<Root>& positive_roots(int n);
SpMat rep_of(const GeneratorRep& rep, const Vec& coeffs);

struct HighestWeight {
  DominantWeight weight;
  int multiplicity;
};
/// Highest weights with multiplicities; sum of multiplicity * weyl_dim equals rep.dim.
std::vector<HighestWeight> highest_weights(const GeneratorRep& rep, double tol = kDefaultTol);

struct IsotypicComponent {
  DominantWeight weight;
  Mat basis;  // orthonormal columns inside the carrier
  int multiplicity;
};
std::vector<IsotypicComponent> isotypic_decomposition(const GeneratorRep& rep, double tol = kDefaultTol);

/// Orthonormal basis of the isotypic component of the given highest weight.
Mat component_basis(const GeneratorRep& rep, const DominantWeight& weight, double tol = kDefaultTol);

/// Irreducible representation with the given highest weight, in an orthonormal basis.
GeneratorRep irrep(const DominantWeight& weight, double tol = kDefaultTol);

}  // namespace spinh
