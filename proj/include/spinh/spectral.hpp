#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinh/sections.hpp"

namespace spinh {

/// sum_{k>=1} (1 - m_k/m_0) x*_k D_k on S^q (x) V_rho. Throws std::invalid_argument
/// for trivial rho, where m_0 vanishes.
SectionOperator build_E(const CliffordHomFamily& f, int q);
/// sum_k m_k x*_k D_k on S^q (x) V_rho.
SectionOperator build_weighted(const CliffordHomFamily& f, int q);

/// H^q (x) V_rho inside S^q (x) V_rho.
struct HarmonicLift {
  int q = 0;
  SpMat lift;        // Fischer-orthonormal columns, harmonic-major
  GeneratorRep rep;  // H^q (x) V_rho in the same coordinates
  /// Weight spaces of rep as sparse orthonormal column blocks. Invariant
  /// operators are block diagonal along them.
  std::vector<std::pair<WeightVector, SpMat>> weights;
};
HarmonicLift harmonic_lift(const CliffordHomFamily& f, int q);

/// Compression lift^* G op lift. Throws NumericalError when op moves
/// H^q (x) V_rho outside itself by more than leak_tol (relative).
SpMat restrict_to_harmonic(const SectionOperator& op, const HarmonicLift& h, double leak_tol = 1e-8,
                           double* leakage = nullptr);

struct SpectralRow {
  std::vector<DominantWeight> mu;  // more than one when predictions coincide
  Rational predicted;
  double computed = 0.0;  // mean of the eigenvalues assigned here
  Index dim = 0;          // number of eigenvalues assigned here
  long long weyl_dim = 0; // sum of multiplicity * weyl_dim over mu
};

struct SpectralReport {
  int n = 0;
  DominantWeight rho = DominantWeight::zero(3);
  int q = 0;
  std::string op;
  std::vector<SpectralRow> rows;  // mu descending
  double max_deviation = 0.0;     // max |eigenvalue - assigned prediction|
  double min_eigenvalue = 0.0;
  double leakage = 0.0;
  /// lap op_q - (op_{q-2} + c) lap, with c = 2 for E (the Euler part shifts
  /// degree) and c = 0 for the weighted operator. Zero means op preserves H^q.
  double laplacian_commutator = 0.0;
  bool nonneg = true;      // min eigenvalue >= -1e-9
  bool dims_match = true;
  bool merged = false;     // some row carries several mu
  bool ordered = true;     // predictions non-decreasing along mu, strictly above the top one
  Mat eigenvectors;        // harmonic coordinates, columns sorted by eigenvalue
  RealVec eigenvalues;

  bool passed(double tol, bool require_nonneg) const;
};

/// Spectrum of E on H^q (x) V_rho against q + m(mu,q)/rho^1.
SpectralReport spectrum_E(const CliffordHomFamily& f, int q);
/// Spectrum of sum_k m_k x*_k D_k on H^q (x) V_rho against m(mu,q).
SpectralReport spectrum_weighted(const CliffordHomFamily& f, int q);

struct KernelReport {
  Index dim = 0;
  long long predicted = 0;  // weyl_dim(h^q + rho)
  Mat basis;                // harmonic coordinates
  /// Largest principal angle against the zero eigenspace of E; absent for trivial rho.
  std::optional<double> angle_to_E;
};
/// Joint kernel of D_k, k >= 1, on H^q (x) V_rho.
KernelReport kernel_intersection(const CliffordHomFamily& f, int q, double tol = kDefaultTol);

struct QuotientEntry {
  std::string label;                  // "ker d / cap", "ker d* / cap", "total / (ker d + ker d*)"
  std::optional<DominantWeight> mu;   // absent when the weight is not dominant
  Index computed = 0;
  long long predicted = 0;            // weyl_dim(mu), 0 when absent
};

struct QuotientReport {
  int n = 0, p = 0, q = 0;
  Index total = 0, ker_d = 0, ker_d_star = 0, intersection = 0, sum = 0;
  long long top_weyl_dim = 0;  // weyl_dim((q+1, 1_{p-1}, 0...))
  std::vector<QuotientEntry> entries;
  /// |c|^2 relating D for the (1_{p+1}) and (1_{p-1}) components to the
  /// coordinate d = sum e_i ^ d/dx_i and d* = -sum i(e_i) d/dx_i, with the
  /// relative deviation of that proportionality.
  double d_scale = 0.0, d_scale_deviation = 0.0;
  double d_star_scale = 0.0, d_star_scale_deviation = 0.0;

  bool all_match() const;
};
QuotientReport quotient_dimensions(int n, int p, int q, double tol = kDefaultTol);

}  // namespace spinh
