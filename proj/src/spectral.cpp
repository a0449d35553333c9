#include "spinh/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "spinh/polynomials.hpp"

namespace spinh {

SectionOperator build_E(const CliffordHomFamily& f, int q) {
  const Rational m0 = f.components.front().conformal_weight;
  if (m0 == Rational(0)) throw std::invalid_argument("E is undefined for trivial rho (m(lambda_0) = 0)");
  const SectionSpace s = rho_space(f, q);
  SectionOperator out{SpMat(s.dim(), s.dim()), s, s};
  if (q <= 0) return out;
  for (std::size_t k = 1; k < f.components.size(); ++k) {
    const double c = 1.0 - to_double(f.components[k].conformal_weight / m0);
    out = out + cplx(c) * compose(make_x_star(f, k, q - 1), make_D(f, k, q));
  }
  return out;
}

SectionOperator build_weighted(const CliffordHomFamily& f, int q) {
  const SectionSpace s = rho_space(f, q);
  SectionOperator out{SpMat(s.dim(), s.dim()), s, s};
  if (q <= 0) return out;
  for (std::size_t k = 0; k < f.components.size(); ++k) {
    const double c = to_double(f.components[k].conformal_weight);
    out = out + cplx(c) * compose(make_x_star(f, k, q - 1), make_D(f, k, q));
  }
  return out;
}

HarmonicLift harmonic_lift(const CliffordHomFamily& f, int q) {
  auto h = harmonic_subspace(f.n, q);
  HarmonicLift out;
  out.q = q;
  out.lift = kron(to_sparse(h.embedding, 1e-14), sparse_identity(f.rho_dim()));
  out.rep = tensor_rep(h.rep, f.rho_rep);
  for (auto& ws : cartan_weight_data(out.rep)) out.weights.emplace_back(ws.weight, to_sparse(ws.basis, 1e-14));
  return out;
}

SpMat restrict_to_harmonic(const SectionOperator& op, const HarmonicLift& h, double leak_tol, double* leakage) {
  if (op.domain.q != h.q || op.codomain.q != h.q || op.domain.dim() != h.lift.rows())
    throw std::invalid_argument("restrict_to_harmonic: operator does not act on S^q (x) V_rho");
  const RealVec g = op.domain.gram();
  SpMat gd(g.size(), g.size());
  gd.reserve(Eigen::VectorXi::Constant(g.size(), 1));
  for (Index i = 0; i < g.size(); ++i) gd.insert(i, i) = g(i);
  const SpMat image = op.matrix * h.lift;
  const SpMat small = (SpMat(h.lift.adjoint()) * gd * image).pruned(1e-14);
  const SpMat back = h.lift * small;
  const double leak = max_abs(SpMat(image - back)) / std::max(1.0, max_abs(image));
  if (leakage) *leakage = leak;
  if (leak > leak_tol)
    throw NumericalError("operator leaks out of the harmonic subspace (" + std::to_string(leak) + ")");
  return small;
}

bool SpectralReport::passed(double tol, bool require_nonneg) const {
  return max_deviation <= tol && dims_match && (!require_nonneg || nonneg);
}

namespace {

// Hermitian eigensolve of an invariant operator, one weight space at a time.
// Coupling between weight spaces is added to the leakage figure.
void blockwise_eigen(const SpMat& c, const HarmonicLift& h, RealVec& values, Mat& vectors, double& leakage) {
  const double scale = std::max(1.0, max_abs(c));
  std::vector<std::pair<double, Vec>> pairs;
  for (const auto& [w, basis] : h.weights) {
    const SpMat cw = c * basis;
    Mat local = Mat(SpMat(basis.adjoint()) * cw);
    leakage = std::max(leakage, max_abs(Mat(Mat(cw) - Mat(basis) * local)) / scale);
    local = (local + local.adjoint()).eval() / 2.0;
    Eigen::SelfAdjointEigenSolver<Mat> es(local);
    if (es.info() != Eigen::Success) throw NumericalError("eigensolve failed");
    const Mat vecs = basis * es.eigenvectors();
    for (Index i = 0; i < vecs.cols(); ++i) pairs.emplace_back(es.eigenvalues()(i), vecs.col(i));
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  values.resize(static_cast<Index>(pairs.size()));
  vectors.resize(h.lift.cols(), static_cast<Index>(pairs.size()));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    values(static_cast<Index>(i)) = pairs[i].first;
    vectors.col(static_cast<Index>(i)) = pairs[i].second;
  }
}

// Joint kernel of sparse operators on H^q (x) V_rho, weight space by weight space.
Mat joint_kernel(const std::vector<SpMat>& ops, const HarmonicLift& h, double tol) {
  Mat out(h.lift.cols(), 0);
  std::vector<Mat> parts;
  Index cols = 0;
  for (const auto& [w, basis] : h.weights) {
    Index rows = 0;
    for (const auto& op : ops) rows += op.rows();
    Mat stacked(rows, basis.cols());
    Index at = 0;
    for (const auto& op : ops) {
      stacked.middleRows(at, op.rows()) = Mat(op * basis);
      at += op.rows();
    }
    parts.push_back(Mat(basis * null_space(stacked, tol)));
    cols += parts.back().cols();
  }
  out.resize(h.lift.cols(), cols);
  Index at = 0;
  for (const auto& p : parts) {
    out.middleCols(at, p.cols()) = p;
    at += p.cols();
  }
  return out;
}

template <class Predict>
SpectralReport run_spectrum(const CliffordHomFamily& f, int q, const char* name, const SectionOperator& op,
                            const SectionOperator& op_down2, double shift, Predict predict) {
  SpectralReport r;
  r.n = f.n;
  r.rho = f.rho;
  r.q = q;
  r.op = name;

  const SectionSpace s = rho_space(f, q);
  const auto lap = make_laplacian(s);
  r.laplacian_commutator =
      relative_deviation(SpMat(lap.matrix * op.matrix),
                         SpMat(op_down2.matrix * lap.matrix + shift * lap.matrix));

  const HarmonicLift h = harmonic_lift(f, q);
  const SpMat c = restrict_to_harmonic(op, h, 1e-8, &r.leakage);
  blockwise_eigen(c, h, r.eigenvalues, r.eigenvectors, r.leakage);
  if (r.leakage > 1e-8) throw NumericalError("operator couples distinct weight spaces");
  r.min_eigenvalue = r.eigenvalues.size() ? r.eigenvalues.minCoeff() : 0.0;
  r.nonneg = r.min_eigenvalue >= -1e-9;

  // Group the components of H^q (x) V_rho by predicted value.
  auto hws = highest_weights(h.rep);
  std::sort(hws.begin(), hws.end(), [](const auto& a, const auto& b) { return a.weight > b.weight; });
  std::map<Rational, std::size_t> row_of;
  for (const auto& hw : hws) {
    const Rational v = predict(hw.weight);
    auto it = row_of.find(v);
    if (it == row_of.end()) {
      it = row_of.emplace(v, r.rows.size()).first;
      r.rows.push_back({{}, v, 0.0, 0, 0});
    }
    auto& row = r.rows[it->second];
    row.mu.push_back(hw.weight);
    row.weyl_dim += hw.multiplicity * weyl_dim(hw.weight);
    if (row.mu.size() > 1) r.merged = true;
  }

  // Prediction-seeded clustering: every eigenvalue joins its nearest prediction.
  for (Index i = 0; i < r.eigenvalues.size(); ++i) {
    const double ev = r.eigenvalues(i);
    std::size_t best = 0;
    for (std::size_t k = 1; k < r.rows.size(); ++k)
      if (std::abs(ev - to_double(r.rows[k].predicted)) < std::abs(ev - to_double(r.rows[best].predicted)))
        best = k;
    auto& row = r.rows[best];
    row.computed += ev;
    ++row.dim;
    r.max_deviation = std::max(r.max_deviation, std::abs(ev - to_double(row.predicted)));
  }
  for (auto& row : r.rows) {
    if (row.dim > 0) row.computed /= static_cast<double>(row.dim);
    if (row.dim != row.weyl_dim) r.dims_match = false;
  }

  for (std::size_t k = 1; k < r.rows.size(); ++k) {
    if (r.rows[k].predicted < r.rows[k - 1].predicted) r.ordered = false;
    if (r.rows[k].predicted <= r.rows.front().predicted) r.ordered = false;
  }
  return r;
}

}  // namespace

SpectralReport spectrum_E(const CliffordHomFamily& f, int q) {
  const auto e = build_E(f, q);
  const auto e2 = build_E(f, q - 2);
  return run_spectrum(f, q, "E", e, e2, 2.0, [&](const DominantWeight& mu) { return e_eigenvalue(mu, f.rho, q); });
}

SpectralReport spectrum_weighted(const CliffordHomFamily& f, int q) {
  const auto w = build_weighted(f, q);
  const auto w2 = build_weighted(f, q - 2);
  auto r = run_spectrum(f, q, "weighted", w, w2, 0.0, [&](const DominantWeight& mu) { return m_mu_q(mu, f.rho, q); });
  // The weighted operator is not expected to be non-negative; ordering is a statement about E.
  r.ordered = true;
  for (std::size_t k = 1; k < r.rows.size(); ++k)
    if (r.rows[k].predicted < r.rows[k - 1].predicted) r.ordered = false;
  return r;
}

namespace {

// D_k restricted to H^q (x) V_rho, rows scaled to Fischer-orthonormal coordinates.
SpMat restricted_D(const CliffordHomFamily& f, std::size_t k, int q, const HarmonicLift& h) {
  const auto d = make_D(f, k, q);
  const RealVec g = d.codomain.gram().cwiseSqrt();
  SpMat scaled = d.matrix;
  for (Index c = 0; c < scaled.outerSize(); ++c)
    for (SpMat::InnerIterator it(scaled, c); it; ++it) it.valueRef() *= g(it.row());
  return scaled * h.lift;
}

}  // namespace

KernelReport kernel_intersection(const CliffordHomFamily& f, int q, double tol) {
  const HarmonicLift h = harmonic_lift(f, q);
  std::vector<SpMat> ops;
  for (std::size_t k = 1; k < f.components.size(); ++k) ops.push_back(restricted_D(f, k, q, h));
  const Index cols = h.lift.cols();
  KernelReport r;
  r.basis = ops.empty() ? Mat(Mat::Identity(cols, cols)) : joint_kernel(ops, h, tol);
  r.dim = r.basis.cols();
  r.predicted = weyl_dim(DominantWeight(f.n, add(harmonic_weight(f.n, q).entries(), f.rho.entries())));
  if (f.components.front().conformal_weight != Rational(0)) {
    const auto e = spectrum_E(f, q);
    Index zeros = 0;
    while (zeros < e.eigenvalues.size() && std::abs(e.eigenvalues(zeros)) < 1e-6) ++zeros;
    r.angle_to_E = max_principal_angle(e.eigenvectors.leftCols(zeros), r.basis);
  }
  return r;
}

bool QuotientReport::all_match() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const QuotientEntry& e) { return e.computed == e.predicted; }) &&
         intersection == top_weyl_dim;
}

namespace {

std::optional<DominantWeight> weight_if_dominant(int n, WeightVector w) {
  if (!is_dominant(n, w)) return std::nullopt;
  return DominantWeight(n, std::move(w));
}

WeightVector leading(int m, int first, int ones) {
  WeightVector w(static_cast<std::size_t>(m), 0);
  if (ones < 0) return {};
  w[0] = first;
  for (int i = 1; i <= ones && i < m; ++i) w[static_cast<std::size_t>(i)] = 1;
  if (ones >= m) return {};
  return w;
}

// sum_i (d/dx_i) (x) b_i on S^q (x) Lambda^p
SpMat coordinate_op(int n, int q, const std::vector<SpMat>& fiber) {
  SpMat out(monomial_count(n, q - 1) * fiber.front().rows(), monomial_count(n, q) * fiber.front().cols());
  for (int i = 1; i <= n; ++i) out += kron(differentiate(n, q, i), fiber[static_cast<std::size_t>(i - 1)]);
  return out;
}

// |c|^2 with A^* G A = |c|^2 B^* G B, and the relative deviation of that fit.
std::pair<double, double> measured_scale(const SpMat& a, const RealVec& ga, const SpMat& b, const RealVec& gb) {
  const auto gram = [](const SpMat& x, const RealVec& g) {
    SpMat gx = x;
    for (Index c = 0; c < gx.outerSize(); ++c)
      for (SpMat::InnerIterator it(gx, c); it; ++it) it.valueRef() *= g(it.row());
    return SpMat(SpMat(x.adjoint()) * gx);
  };
  const SpMat aa = gram(a, ga);
  const SpMat bb = gram(b, gb);
  cplx ta = 0.0, tb = 0.0;
  for (Index i = 0; i < aa.rows(); ++i) {
    ta += aa.coeff(i, i);
    tb += bb.coeff(i, i);
  }
  if (tb.real() == 0.0) return {0.0, max_abs(aa)};
  const double c2 = ta.real() / tb.real();
  return {c2, relative_deviation(aa, SpMat(c2 * bb))};
}

}  // namespace

QuotientReport quotient_dimensions(int n, int p, int q, double tol) {
  const int m = weight_rank(n);
  if (n < 3 || q < 0 || p < 1 || p + 1 > m || (n % 2 == 0 && p + 1 == m))
    throw std::invalid_argument("quotient_dimensions needs 1 <= p, with Lambda^{p+1} irreducible and p+1 <= m");

  const auto f = build_family(exterior_rep(n, p));
  const auto find = [&](const DominantWeight& w) -> std::size_t {
    for (std::size_t k = 0; k < f.components.size(); ++k)
      if (f.components[k].lambda == w) return k;
    throw NumericalError("component " + w.to_string() + " missing from Lambda^p (x) R^n");
  };
  const std::size_t kd = find(form_weight(n, p + 1));
  const std::size_t kds = find(form_weight(n, p - 1));

  QuotientReport r;
  r.n = n;
  r.p = p;
  r.q = q;
  const HarmonicLift h = harmonic_lift(f, q);
  r.total = h.lift.cols();
  const SpMat d = restricted_D(f, kd, q, h);
  const SpMat ds = restricted_D(f, kds, q, h);
  r.ker_d = joint_kernel({d}, h, tol).cols();
  r.ker_d_star = joint_kernel({ds}, h, tol).cols();
  r.intersection = joint_kernel({d, ds}, h, tol).cols();
  r.sum = r.ker_d + r.ker_d_star - r.intersection;
  r.top_weyl_dim = weyl_dim(DominantWeight(n, leading(m, q + 1, p - 1)));

  const auto entry = [&](std::string label, WeightVector w, Index computed) {
    QuotientEntry e{std::move(label), w.empty() ? std::nullopt : weight_if_dominant(n, std::move(w)), computed, 0};
    if (e.mu) e.predicted = weyl_dim(*e.mu);
    r.entries.push_back(std::move(e));
  };
  entry("ker d / (ker d cap ker d*)", leading(m, q, p), r.ker_d - r.intersection);
  entry("ker d* / (ker d cap ker d*)", leading(m, q, p - 2), r.ker_d_star - r.intersection);
  entry("total / (ker d + ker d*)", leading(m, q - 1, p - 1), r.total - r.sum);

  // Coordinate d and d*, compared up to a scalar.
  std::vector<SpMat> wedge, inter;
  for (int i = 1; i <= n; ++i) {
    wedge.push_back(wedge_matrix(n, p, i));
    inter.push_back(-interior_matrix(n, p, i));
  }
  const auto dk = make_D(f, kd, q);
  const auto dsk = make_D(f, kds, q);
  const RealVec g_low = fischer_norms(n, q - 1);
  const auto expand = [](const RealVec& g, Index fiber) {
    RealVec out(g.size() * fiber);
    for (Index a = 0; a < g.size(); ++a) out.segment(a * fiber, fiber).setConstant(g(a));
    return out;
  };
  std::tie(r.d_scale, r.d_scale_deviation) =
      measured_scale(dk.matrix, dk.codomain.gram(), coordinate_op(n, q, wedge),
                     expand(g_low, static_cast<Index>(form_basis(n, p + 1).size())));
  std::tie(r.d_star_scale, r.d_star_scale_deviation) =
      measured_scale(dsk.matrix, dsk.codomain.gram(), coordinate_op(n, q, inter),
                     expand(g_low, static_cast<Index>(form_basis(n, p - 1).size())));
  return r;
}

}  // namespace spinh
