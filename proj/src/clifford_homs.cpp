#include "spinh/clifford_homs.hpp"

#include <algorithm>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "spinh/clifford.hpp"

namespace spinh {

Mat CliffordHomFamily::p_of(std::size_t k, const Vec& u) const {
  const auto& c = components.at(k);
  Mat out = Mat::Zero(c.rep.dim, rho_rep.dim);
  for (int i = 0; i < n; ++i)
    if (u(i) != cplx(0.0)) out += u(i) * c.p[static_cast<std::size_t>(i)];
  return out;
}

CliffordHomFamily build_family(const GeneratorRep& rho_rep_in, double tol) {
  const GeneratorRep rho_rep = orthonormalized(rho_rep_in);
  const int n = rho_rep.n;

  DominantWeight rho = DominantWeight::zero(n);
  if (rho_rep.label) {
    rho = *rho_rep.label;
  } else {
    const auto hws = highest_weights(rho_rep, tol);
    if (hws.size() != 1 || hws.front().multiplicity != 1)
      throw std::invalid_argument("build_family: representation is not irreducible");
    rho = hws.front().weight;
  }

  const auto expected = tensor_vector_components(rho);
  const GeneratorRep t = tensor_rep(rho_rep, vector_rep(n));
  auto iso = isotypic_decomposition(t, tol);
  std::sort(iso.begin(), iso.end(), [](const auto& a, const auto& b) { return a.weight > b.weight; });

  if (iso.size() != expected.size())
    throw NumericalError("V_rho (x) R^n split into " + std::to_string(iso.size()) + " components, expected " +
                         std::to_string(expected.size()));
  for (std::size_t k = 0; k < iso.size(); ++k)
    if (iso[k].weight != expected[k] || iso[k].multiplicity != 1)
      throw NumericalError("unexpected component " + iso[k].weight.to_string() + " in V_rho (x) R^n");

  CliffordHomFamily f{n, rho, rho_rep, {}};
  const Index d = rho_rep.dim;
  for (auto& c : iso) {
    HomComponent h{c.weight, conformal_weight(rho, c.weight), {}, restrict_rep(t, c.basis), c.basis};
    h.rep.label = c.weight;
    // rows a*n + i of the basis carry v_a (x) e_i
    const Mat bt = c.basis.adjoint();
    for (int i = 0; i < n; ++i) {
      Mat p(bt.rows(), d);
      for (Index a = 0; a < d; ++a) p.col(a) = bt.col(a * n + i);
      p = p.unaryExpr([](cplx z) { return std::abs(z) < 1e-14 ? cplx(0.0) : z; });
      h.p.push_back(std::move(p));
    }
    f.components.push_back(std::move(h));
  }
  return f;
}

Mat bracket_action(const GeneratorRep& rep, const RealVec& u, const RealVec& v) {
  Mat out = Mat::Zero(rep.dim, rep.dim);
  for (int a = 1; a <= rep.n; ++a)
    for (int b = a + 1; b <= rep.n; ++b) {
      const double c = u(a - 1) * v(b - 1) - u(b - 1) * v(a - 1);
      if (c != 0.0) out += c * Mat(rep.gen(a, b));
    }
  return out;
}

Mat r_q_endo(const GeneratorRep& rho_rep, int q, const RealVec& u, const RealVec& v) {
  switch (q) {
    case 0:
      return u.dot(v) * Mat::Identity(rho_rep.dim, rho_rep.dim);
    case 1:
      return -0.25 * bracket_action(rho_rep, u, v);
    case 2: {
      Mat out = Mat::Zero(rho_rep.dim, rho_rep.dim);
      for (int l = 0; l < rho_rep.n; ++l) {
        const RealVec el = RealVec::Unit(rho_rep.n, l);
        out += bracket_action(rho_rep, u, el) * bracket_action(rho_rep, el, v);
      }
      return out / 16.0;
    }
    default:
      throw std::invalid_argument("r_q_endo: q must be 0, 1 or 2");
  }
}

double verify_completeness(const CliffordHomFamily& f, int q) {
  double worst = 0.0;
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j) {
      Mat lhs = Mat::Zero(f.rho_dim(), f.rho_dim());
      for (const auto& c : f.components) {
        const double w = std::pow(to_double(c.conformal_weight), q);
        lhs += w * c.p[static_cast<std::size_t>(j)].adjoint() * c.p[static_cast<std::size_t>(i)];
      }
      const Mat rhs = r_q_endo(f.rho_rep, q, RealVec::Unit(f.n, j), RealVec::Unit(f.n, i));
      worst = std::max(worst, relative_deviation(lhs, rhs));
    }
  return worst;
}

double verify_equivariance(const CliffordHomFamily& f) {
  double worst = 0.0;
  for (int a = 1; a <= f.n; ++a)
    for (int b = a + 1; b <= f.n; ++b) {
      const CliffordElement g = generator(a, b, f.n);
      for (int c = 1; c <= f.n; ++c) {
        const Vec moved = commutator(g, CliffordElement::basis_vector(f.n, c)).vector_part();
        const Mat rho_g = Mat(f.rho_rep.gen(a, b));
        for (std::size_t k = 0; k < f.components.size(); ++k) {
          const auto& comp = f.components[k];
          const Mat lhs = f.p_of(k, moved);
          const Mat& pc = comp.p[static_cast<std::size_t>(c - 1)];
          const Mat rhs = Mat(comp.rep.gen(a, b)) * pc - pc * rho_g;
          worst = std::max(worst, relative_deviation(lhs, rhs));
        }
      }
    }
  return worst;
}

double verify_group_equivariance(const CliffordHomFamily& f, std::span<const double> ts) {
  double worst = 0.0;
  for (double t : ts)
    for (int a = 1; a <= f.n; ++a)
      for (int b = a + 1; b <= f.n; ++b) {
        const CliffordElement x = cplx(t) * generator(a, b, f.n);
        const CliffordElement g = exp(x);
        const CliffordElement ginv = exp(cplx(-1.0) * x);
        const Mat rho_ginv = Mat(-t * Mat(f.rho_rep.gen(a, b))).exp();
        std::vector<Mat> lam_g;
        for (const auto& comp : f.components) lam_g.push_back(Mat(t * Mat(comp.rep.gen(a, b))).exp());
        for (int c = 1; c <= f.n; ++c) {
          const Vec moved = (g * CliffordElement::basis_vector(f.n, c) * ginv).vector_part();
          for (std::size_t k = 0; k < f.components.size(); ++k) {
            const auto& comp = f.components[k];
            const Mat lhs = f.p_of(k, moved);
            const Mat rhs = lam_g[k] * comp.p[static_cast<std::size_t>(c - 1)] * rho_ginv;
            worst = std::max(worst, relative_deviation(lhs, rhs));
          }
        }
      }
  return worst;
}

double spinor_self_scale(const CliffordHomFamily& f) {
  if (f.n % 2 == 0 || f.rho != spinor_weight(f.n)) return -1.0;
  for (const auto& c : f.components)
    if (c.lambda == f.rho) {
      const Mat& p = c.p.front();
      return (p.adjoint() * p).trace().real() / static_cast<double>(f.rho_dim());
    }
  return -1.0;
}

}  // namespace spinh
