#include <random>

#include "doctest.h"
#include "spinh/polynomials.hpp"
#include "spinh/sections.hpp"

using namespace spinh;

namespace {

Rational r(long long a, long long b = 1) { return Rational(a, b); }

Vec random_vec(Index n, std::mt19937& rng) {
  std::normal_distribution<double> d;
  Vec v(n);
  for (Index i = 0; i < n; ++i) v(i) = cplx(d(rng), d(rng));
  return v;
}

cplx inner(const SectionSpace& s, const Vec& a, const Vec& b) {
  return a.dot(s.gram().cast<cplx>().asDiagonal() * b);
}

struct Case {
  GeneratorRep rep;
  int q;
};

std::vector<Case> grid_cases() {
  return {{spinor_rep(5), 2}, {exterior_rep(7, 2), 2}, {trivial_rep(5), 3}};
}

}  // namespace

TEST_CASE("space dimensions and grading") {
  const auto f = build_family(spinor_rep(5));
  for (int q = 0; q <= 3; ++q) {
    const auto s = rho_space(f, q);
    CHECK(s.dim() == monomial_count(5, q) * 4);
    for (std::size_t k = 0; k < f.components.size(); ++k) {
      const auto x = make_x(f, k, q);
      CHECK(x.order() == -1);
      CHECK(x.codomain.q == q + 1);
      CHECK(x.matrix.rows() == x.codomain.dim());
      CHECK(x.matrix.cols() == x.domain.dim());
      const auto d = make_D(f, k, q);
      CHECK(d.order() == 1);
      CHECK(d.matrix.rows() == d.codomain.dim());
      CHECK(make_x_star(f, k, q).order() == -1);
      CHECK(make_D_star(f, k, q).order() == 1);
    }
  }
  CHECK_THROWS(make_x(f, 2, 1));
}

TEST_CASE("D vanishes on constants") {
  const auto f = build_family(exterior_rep(5, 2));
  for (std::size_t k = 0; k < f.components.size(); ++k) CHECK(max_abs(make_D(f, k, 0).matrix) == 0.0);
}

TEST_CASE("x on the constant section for trivial rho") {
  const auto f = build_family(trivial_rep(5));
  const auto x = make_x(f, 0, 0);
  const Vec one = Vec::Ones(1);
  const Vec out = x.matrix * one;
  CHECK(std::abs(inner(x.codomain, out, out) - cplx(5.0)) < 1e-13);
}

TEST_CASE("Fischer adjoint pairs") {
  std::mt19937 rng(11);
  for (const auto& c : grid_cases()) {
    const auto f = build_family(c.rep);
    for (std::size_t k = 0; k < f.components.size(); ++k) {
      const auto x = make_x(f, k, c.q);
      const auto dstar = make_D_star(f, k, c.q + 1);
      const auto xstar = make_x_star(f, k, c.q);
      const auto d = make_D(f, k, c.q + 1);
      CHECK(relative_deviation(fischer_adjoint(x).matrix, SpMat(-dstar.matrix)) < 1e-12);
      CHECK(relative_deviation(fischer_adjoint(xstar).matrix, d.matrix) < 1e-12);
      // <x f, g> = <f, -D* g> and <x* f, g> = <f, D g> with random sections
      const Vec u = random_vec(x.domain.dim(), rng);
      const Vec v = random_vec(x.codomain.dim(), rng);
      const cplx a = inner(x.codomain, x.matrix * u, v);
      const cplx b = inner(x.domain, u, -(dstar.matrix * v));
      CHECK(std::abs(a - b) < 1e-10 * (1.0 + std::abs(a)));
      const Vec u2 = random_vec(xstar.domain.dim(), rng);
      const Vec v2 = random_vec(xstar.codomain.dim(), rng);
      const cplx a2 = inner(xstar.codomain, xstar.matrix * u2, v2);
      const cplx b2 = inner(xstar.domain, u2, d.matrix * v2);
      CHECK(std::abs(a2 - b2) < 1e-10 * (1.0 + std::abs(a2)));
    }
  }
}

TEST_CASE("scalar operators") {
  const auto f = build_family(trivial_rep(5));
  for (int q = 0; q <= 4; ++q) {
    const auto s = rho_space(f, q);
    const SpMat e = make_euler(s).matrix;
    CHECK(relative_deviation(e, SpMat(double(q) * make_identity(s).matrix)) == 0.0);
  }
  // laplacian r^2 = -2n on constants
  const auto s0 = rho_space(f, 0);
  const SpMat lr = make_laplacian(rho_space(f, 2)).matrix * make_r_squared(s0).matrix;
  CHECK(lr.rows() == 1);
  CHECK(std::abs(Mat(lr)(0, 0) - cplx(-10.0)) < 1e-14);
  // laplacian on the harmonic basis
  const auto h = harmonic_subspace(5, 3);
  CHECK(max_abs(Mat(Mat(make_laplacian(rho_space(f, 3)).matrix) * h.embedding)) < 1e-12);
}

TEST_CASE("scalar-coefficient operators are invariant") {
  const auto f = build_family(spinor_rep(5));
  const auto s = rho_space(f, 2);
  CHECK(verify_invariance(make_laplacian(s)) < 1e-12);
  CHECK(verify_invariance(make_r_squared(s)) < 1e-12);
  CHECK(verify_invariance(make_euler(s)) < 1e-12);
}

TEST_CASE("x, x*, D, D* are invariant") {
  const auto f = build_family(spinor_rep(5));
  for (int q : {1, 2})
    for (std::size_t k = 0; k < f.components.size(); ++k) {
      CHECK(verify_invariance(make_x(f, k, q)) < 1e-10);
      CHECK(verify_invariance(make_x_star(f, k, q)) < 1e-10);
      CHECK(verify_invariance(make_D(f, k, q)) < 1e-10);
      CHECK(verify_invariance(make_D_star(f, k, q)) < 1e-10);
    }
  // a coordinate operator that is not invariant
  const auto s = rho_space(f, 2);
  const SpMat xd = kron(SpMat(multiply_by(5, 1, 1) * differentiate(5, 2, 2)), sparse_identity(4));
  CHECK(verify_invariance(SectionOperator{xd, s, s}) > 1e-3);
}

TEST_CASE("operator identities on grid instances") {
  for (const auto& c : grid_cases()) {
    const auto f = build_family(c.rep);
    const auto ids = operator_identities(f, c.q);
    CHECK(ids.size() == 12);
    for (const auto& id : ids) {
      CAPTURE(id.name);
      CHECK(id.deviation < 1e-10);
    }
  }
}

TEST_CASE("trivial rho: conformal weight zero and x*D is the Euler operator") {
  const auto f = build_family(trivial_rep(5));
  REQUIRE(f.components.size() == 1);
  CHECK(f.components[0].conformal_weight == r(0));
  const auto xd = compose(make_x_star(f, 0, 2), make_D(f, 0, 3));
  CHECK(relative_deviation(xd.matrix, make_euler(rho_space(f, 3)).matrix) < 1e-13);
}

TEST_CASE("composites do not see the phase of p") {
  auto f = build_family(exterior_rep(5, 2));
  const auto before = compose(make_x_star(f, 1, 2), make_D(f, 1, 3)).matrix;
  const auto before_xx = compose(make_x_star(f, 1, 3), make_x(f, 1, 2)).matrix;
  const cplx phase = std::polar(1.0, 0.917);
  for (auto& p : f.components[1].p) p *= phase;
  const auto after = compose(make_x_star(f, 1, 2), make_D(f, 1, 3)).matrix;
  const auto after_xx = compose(make_x_star(f, 1, 3), make_x(f, 1, 2)).matrix;
  CHECK(relative_deviation(before, after) < 1e-14);
  CHECK(relative_deviation(before_xx, after_xx) < 1e-14);
}

TEST_CASE("radial decomposition of S^q") {
  for (auto [n, q] : {std::pair{5, 2}, {5, 4}, {3, 4}, {4, 3}, {5, 0}}) {
    const auto s = scalar_spectral_check(n, q);
    CAPTURE(n);
    CAPTURE(q);
    CHECK(s.dims_match);
    REQUIRE(static_cast<int>(s.levels.size()) == q / 2 + 1);
    Index total = 0;
    for (const auto& l : s.levels) {
      // -r^2 laplacian acts on r^{2k} H^{q-2k} by 2k(2q-2k+n-2)
      CHECK(std::abs(l.computed - to_double(scalar_radial_eigenvalue(n, q, l.k))) < 1e-8);
      CHECK(l.dim == l.expected_dim);
      total += l.dim;
    }
    CHECK(total == monomial_count(n, q));
  }
}
