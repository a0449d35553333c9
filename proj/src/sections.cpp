#include "spinh/sections.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "spinh/clifford.hpp"
#include "spinh/polynomials.hpp"

namespace spinh {

Index SectionSpace::dim() const { return monomial_count(n, q) * fiber->dim; }

RealVec SectionSpace::gram() const {
  const RealVec f = fischer_norms(n, q);
  RealVec g(dim());
  const Index d = fiber->dim;
  for (Index a = 0; a < f.size(); ++a) g.segment(a * d, d).setConstant(f(a));
  return g;
}

std::vector<SpMat> SectionSpace::action() const {
  if (q < 0) return std::vector<SpMat>(static_cast<std::size_t>(pair_count(n)), SpMat(0, 0));
  const auto poly = poly_rep(n, q);
  const SpMat ip = sparse_identity(poly.dim);
  const SpMat iv = sparse_identity(fiber->dim);
  std::vector<SpMat> out;
  out.reserve(poly.gens.size());
  for (std::size_t p = 0; p < poly.gens.size(); ++p)
    out.push_back(kron(poly.gens[p], iv) + kron(ip, fiber->gens[p]));
  return out;
}

namespace {

void require_same(const SectionSpace& a, const SectionSpace& b, const char* what) {
  if (!a.same_as(b)) throw std::invalid_argument(std::string(what) + ": incompatible section spaces");
}

void require_k(const CliffordHomFamily& f, std::size_t k) {
  if (k >= f.components.size())
    throw std::out_of_range("component index " + std::to_string(k) + " out of range");
}

SpMat diag(const RealVec& v) {
  SpMat m(v.size(), v.size());
  std::vector<Eigen::Triplet<cplx>> trips;
  for (Index i = 0; i < v.size(); ++i) trips.emplace_back(i, i, v(i));
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

// sum_i (scalar op)_i (x) fiber_i
SpMat assemble(int n, const std::vector<SpMat>& scalar, const std::vector<Mat>& fiber) {
  SpMat out(scalar.front().rows() * fiber.front().rows(), scalar.front().cols() * fiber.front().cols());
  for (int i = 0; i < n; ++i) out += kron(scalar[static_cast<std::size_t>(i)], fiber[static_cast<std::size_t>(i)], 1e-15);
  return out;
}

std::vector<SpMat> multipliers(int n, int q) {
  std::vector<SpMat> out;
  for (int i = 1; i <= n; ++i) out.push_back(multiply_by(n, q, i));
  return out;
}

std::vector<SpMat> derivatives(int n, int q) {
  std::vector<SpMat> out;
  for (int i = 1; i <= n; ++i) out.push_back(differentiate(n, q, i));
  return out;
}

std::vector<Mat> adjoints(const std::vector<Mat>& ps) {
  std::vector<Mat> out;
  for (const auto& p : ps) out.push_back(p.adjoint());
  return out;
}

}  // namespace

SectionOperator operator+(const SectionOperator& a, const SectionOperator& b) {
  require_same(a.domain, b.domain, "operator+");
  require_same(a.codomain, b.codomain, "operator+");
  return {a.matrix + b.matrix, a.domain, a.codomain};
}

SectionOperator operator-(const SectionOperator& a, const SectionOperator& b) {
  require_same(a.domain, b.domain, "operator-");
  require_same(a.codomain, b.codomain, "operator-");
  return {a.matrix - b.matrix, a.domain, a.codomain};
}

SectionOperator operator*(cplx s, const SectionOperator& a) { return {s * a.matrix, a.domain, a.codomain}; }

SectionOperator compose(const SectionOperator& a, const SectionOperator& b) {
  require_same(a.domain, b.codomain, "compose");
  return {SpMat(a.matrix * b.matrix), b.domain, a.codomain};
}

SectionOperator fischer_adjoint(const SectionOperator& op) {
  const RealVec gd = op.domain.gram();
  const RealVec gc = op.codomain.gram();
  SpMat adj = diag(gd.cwiseInverse()) * SpMat(op.matrix.adjoint()) * diag(gc);
  return {adj, op.codomain, op.domain};
}

SectionSpace rho_space(const CliffordHomFamily& f, int q) { return {f.n, q, &f.rho_rep}; }

SectionSpace lambda_space(const CliffordHomFamily& f, std::size_t k, int q) {
  require_k(f, k);
  return {f.n, q, &f.components[k].rep};
}

SectionOperator make_x(const CliffordHomFamily& f, std::size_t k, int q) {
  require_k(f, k);
  return {assemble(f.n, multipliers(f.n, q), f.components[k].p), rho_space(f, q), lambda_space(f, k, q + 1)};
}

SectionOperator make_x_star(const CliffordHomFamily& f, std::size_t k, int q) {
  require_k(f, k);
  return {assemble(f.n, multipliers(f.n, q), adjoints(f.components[k].p)), lambda_space(f, k, q),
          rho_space(f, q + 1)};
}

SectionOperator make_D(const CliffordHomFamily& f, std::size_t k, int q) {
  require_k(f, k);
  return {assemble(f.n, derivatives(f.n, q), f.components[k].p), rho_space(f, q), lambda_space(f, k, q - 1)};
}

SectionOperator make_D_star(const CliffordHomFamily& f, std::size_t k, int q) {
  require_k(f, k);
  SpMat m = -assemble(f.n, derivatives(f.n, q), adjoints(f.components[k].p));
  return {m, lambda_space(f, k, q), rho_space(f, q - 1)};
}

SectionOperator make_laplacian(const SectionSpace& s) {
  SectionSpace to = s;
  to.q = s.q - 2;
  return {kron(laplacian(s.n, s.q), sparse_identity(s.fiber_dim())), s, to};
}

SectionOperator make_r_squared(const SectionSpace& s) {
  SectionSpace to = s;
  to.q = s.q + 2;
  return {kron(r_squared(s.n, s.q), sparse_identity(s.fiber_dim())), s, to};
}

SectionOperator make_euler(const SectionSpace& s) { return cplx(s.q) * make_identity(s); }

SectionOperator make_identity(const SectionSpace& s) { return {sparse_identity(s.dim()), s, s}; }

double verify_invariance(const SectionOperator& op) {
  const auto from = op.domain.action();
  const auto to = op.codomain.action();
  double worst = 0.0;
  for (std::size_t p = 0; p < from.size(); ++p) {
    const SpMat lhs = op.matrix * from[p];
    const SpMat rhs = to[p] * op.matrix;
    worst = std::max(worst, relative_deviation(lhs, rhs));
  }
  return worst;
}

namespace {

double dev(const SectionOperator& a, const SectionOperator& b) {
  require_same(a.domain, b.domain, "identity check");
  require_same(a.codomain, b.codomain, "identity check");
  return relative_deviation(a.matrix, b.matrix);
}

SectionOperator zero(const SectionSpace& from, const SectionSpace& to) {
  return {SpMat(to.dim(), from.dim()), from, to};
}

double weight(const CliffordHomFamily& f, std::size_t k) { return to_double(f.components[k].conformal_weight); }

SectionOperator weighted_x_star_D(const CliffordHomFamily& f, int q) {
  const SectionSpace s = rho_space(f, q);
  SectionOperator out = zero(s, s);
  for (std::size_t k = 0; k < f.components.size(); ++k) {
    if (q <= 0) break;
    out = out + cplx(weight(f, k)) * compose(make_x_star(f, k, q - 1), make_D(f, k, q));
  }
  return out;
}

}  // namespace

std::vector<IdentityCheck> contraction_identities(const CliffordHomFamily& f, int q) {
  const SectionSpace s = rho_space(f, q);
  SectionSpace up2 = s, down2 = s;
  up2.q = q + 2;
  down2.q = q - 2;

  SectionOperator xx = zero(s, up2), dd = zero(s, down2), dx = zero(s, s), xd = zero(s, s);
  for (std::size_t k = 0; k < f.components.size(); ++k) {
    const auto x = make_x(f, k, q);
    const auto d = make_D(f, k, q);
    xx = xx + compose(make_x_star(f, k, q + 1), x);
    dx = dx + compose(make_D_star(f, k, q + 1), x);
    if (q >= 1) {
      dd = dd + compose(make_D_star(f, k, q - 1), d);
      xd = xd + compose(make_x_star(f, k, q - 1), d);
    }
  }
  return {
      {"sum x*x = r^2", dev(xx, make_r_squared(s))},
      {"sum D*D = laplacian", dev(dd, make_laplacian(s))},
      {"sum D*x = -n - euler", dev(dx, cplx(-1.0) * (cplx(f.n) * make_identity(s) + make_euler(s)))},
      {"sum x*D = euler", dev(xd, make_euler(s))},
  };
}

std::vector<IdentityCheck> weighted_identities(const CliffordHomFamily& f, int q) {
  const SectionSpace s = rho_space(f, q);
  SectionSpace up2 = s, down2 = s;
  up2.q = q + 2;
  down2.q = q - 2;
  SectionOperator xx = zero(s, up2), dd = zero(s, down2);
  for (std::size_t k = 0; k < f.components.size(); ++k) {
    const cplx m = weight(f, k);
    xx = xx + m * compose(make_x_star(f, k, q + 1), make_x(f, k, q));
    if (q >= 1) dd = dd + m * compose(make_D_star(f, k, q - 1), make_D(f, k, q));
  }
  return {
      {"sum m x*x = 0", dev(xx, zero(s, up2))},
      {"sum m D*D = 0", dev(dd, zero(s, down2))},
  };
}

std::vector<IdentityCheck> laplacian_commutators(const CliffordHomFamily& f, int q) {
  double d_star = 0.0, d = 0.0, x = 0.0, x_star = 0.0;
  for (std::size_t k = 0; k < f.components.size(); ++k) {
    const SectionSpace r = rho_space(f, q);
    const SectionSpace l = lambda_space(f, k, q);
    // [lap, D*] on S^q (x) V_lambda
    {
      const auto lhs = compose(make_laplacian(rho_space(f, q - 1)), make_D_star(f, k, q)) -
                       compose(make_D_star(f, k, q - 2), make_laplacian(l));
      d_star = std::max(d_star, dev(lhs, zero(l, rho_space(f, q - 3))));
    }
    // [lap, D] on S^q (x) V_rho
    {
      const auto lhs = compose(make_laplacian(lambda_space(f, k, q - 1)), make_D(f, k, q)) -
                       compose(make_D(f, k, q - 2), make_laplacian(r));
      d = std::max(d, dev(lhs, zero(r, lambda_space(f, k, q - 3))));
    }
    // [lap, x] = -2 D
    {
      const auto lhs = compose(make_laplacian(lambda_space(f, k, q + 1)), make_x(f, k, q)) -
                       compose(make_x(f, k, q - 2), make_laplacian(r));
      x = std::max(x, dev(lhs, cplx(-2.0) * make_D(f, k, q)));
    }
    // [lap, x*] = 2 D*
    {
      const auto lhs = compose(make_laplacian(rho_space(f, q + 1)), make_x_star(f, k, q)) -
                       compose(make_x_star(f, k, q - 2), make_laplacian(l));
      x_star = std::max(x_star, dev(lhs, cplx(2.0) * make_D_star(f, k, q)));
    }
  }
  return {
      {"[laplacian, D*] = 0", d_star},
      {"[laplacian, D] = 0", d},
      {"[laplacian, x] = -2 D", x},
      {"[laplacian, x*] = 2 D*", x_star},
  };
}

std::vector<IdentityCheck> weighted_coincidence(const CliffordHomFamily& f, int q) {
  const SectionSpace s = rho_space(f, q);
  SectionOperator dx = zero(s, s);
  for (std::size_t k = 0; k < f.components.size(); ++k)
    dx = dx + cplx(weight(f, k)) * compose(make_D_star(f, k, q + 1), make_x(f, k, q));
  const auto xd = weighted_x_star_D(f, q);
  const auto comm =
      compose(make_laplacian(s), xd) - compose(weighted_x_star_D(f, q - 2), make_laplacian(s));
  SectionSpace down2 = s;
  down2.q = q - 2;
  return {
      {"sum m D*x = sum m x*D", dev(dx, xd)},
      {"[laplacian, sum m x*D] = 0", dev(comm, zero(s, down2))},
  };
}

std::vector<IdentityCheck> operator_identities(const CliffordHomFamily& f, int q) {
  std::vector<IdentityCheck> out;
  for (auto part : {contraction_identities(f, q), weighted_identities(f, q), laplacian_commutators(f, q),
                    weighted_coincidence(f, q)})
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

ScalarSpectrum scalar_spectral_check(int n, int q) {
  if (n < 3 || q < 0) throw std::invalid_argument("scalar_spectral_check needs n >= 3, q >= 0");
  // -r^2 lap is self-adjoint for the Fischer product; conjugate by sqrt(alpha!).
  const RealVec s = fischer_norms(n, q).cwiseSqrt();
  const Mat op = -Mat(SpMat(r_squared(n, q - 2) * laplacian(n, q)));
  const Mat sym = s.asDiagonal() * op * s.cwiseInverse().asDiagonal();
  Eigen::SelfAdjointEigenSolver<Mat> es(Mat((sym + sym.adjoint()) / 2.0), Eigen::EigenvaluesOnly);
  const RealVec ev = es.eigenvalues();

  // Clusters in ascending order; the k-th cluster is the r^{2k} H^{q-2k} level.
  std::vector<std::pair<double, Index>> clusters;
  for (Index i = 0; i < ev.size(); ++i) {
    if (!clusters.empty() && std::abs(ev(i) - clusters.back().first / static_cast<double>(clusters.back().second)) <
                                 1e-6 * (1.0 + std::abs(ev(i)))) {
      clusters.back().first += ev(i);
      ++clusters.back().second;
    } else {
      clusters.emplace_back(ev(i), 1);
    }
  }

  ScalarSpectrum out{n, q, {}, 0.0, true};
  const int levels = q / 2 + 1;
  if (static_cast<int>(clusters.size()) != levels) out.dims_match = false;
  for (int k = 0; k < levels; ++k) {
    ScalarLevel lv{k, Rational(k * (2 * q - 2 * k + n - 2)), 0.0, 0,
                   monomial_count(n, q - 2 * k) - monomial_count(n, q - 2 * k - 2)};
    if (k < static_cast<int>(clusters.size())) {
      lv.computed = clusters[static_cast<std::size_t>(k)].first /
                    static_cast<double>(clusters[static_cast<std::size_t>(k)].second);
      lv.dim = clusters[static_cast<std::size_t>(k)].second;
    }
    if (lv.dim != lv.expected_dim) out.dims_match = false;
    out.max_deviation = std::max(out.max_deviation, std::abs(lv.computed - to_double(lv.predicted)));
    out.levels.push_back(lv);
  }
  // eigenvalue-level deviation, not just cluster means
  Index offset = 0;
  for (const auto& lv : out.levels) {
    for (Index i = offset; i < offset + lv.dim && i < ev.size(); ++i)
      out.max_deviation = std::max(out.max_deviation, std::abs(ev(i) - to_double(lv.predicted)));
    offset += lv.dim;
  }
  return out;
}

}  // namespace spinh
