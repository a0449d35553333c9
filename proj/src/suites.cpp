#include "spinh/suites.hpp"

#include <cstdlib>

namespace spinh {

namespace {

void add(std::vector<CheckResult>& out, const std::string& suite, const std::string& name, double dev, double tol) {
  out.push_back({suite, name, dev, dev <= tol});
}

void flag(std::vector<CheckResult>& out, const std::string& suite, const std::string& name, bool ok) {
  out.push_back({suite, name, ok ? 0.0 : 1.0, ok});
}

void clifford_checks(const CliffordHomFamily& f, double tol, std::vector<CheckResult>& out) {
  const char* s = "clifford";
  for (int q = 0; q <= 2; ++q) add(out, s, "completeness q=" + std::to_string(q), verify_completeness(f, q), tol);
  add(out, s, "equivariance (algebra)", verify_equivariance(f), tol);
  const double ts[] = {0.3, 1.0};
  add(out, s, "equivariance (group)", verify_group_equivariance(f, ts), tol);
}

void spectral_checks(const CliffordHomFamily& f, int q, double tol, std::vector<CheckResult>& out) {
  const char* s = "spectral";
  for (std::size_t k = 0; k < f.components.size(); ++k) {
    const std::string tag = " k=" + std::to_string(k);
    add(out, s, "invariance x" + tag, verify_invariance(make_x(f, k, q)), tol);
    add(out, s, "invariance x*" + tag, verify_invariance(make_x_star(f, k, q)), tol);
    add(out, s, "invariance D" + tag, verify_invariance(make_D(f, k, q)), tol);
    add(out, s, "invariance D*" + tag, verify_invariance(make_D_star(f, k, q)), tol);
  }
  const auto w = spectrum_weighted(f, q);
  add(out, s, "weighted spectrum = m(mu,q)", w.max_deviation, tol);
  flag(out, s, "weighted spectrum dims", w.dims_match);
  if (f.components.front().conformal_weight == Rational(0)) return;  // E needs m(lambda_0) != 0

  add(out, s, "invariance E", verify_invariance(build_E(f, q)), tol);
  const auto e = spectrum_E(f, q);
  add(out, s, "E spectrum = q + m(mu,q)/rho^1", e.max_deviation, tol);
  flag(out, s, "E spectrum dims", e.dims_match);
  out.push_back({s, "E non-negative", std::max(0.0, -e.min_eigenvalue), e.nonneg});
  add(out, s, "laplacian E_q = (E_{q-2} + 2) laplacian", e.laplacian_commutator, tol);
  const auto k = kernel_intersection(f, q);
  out.push_back({s, "joint kernel dim = weyl_dim(h^q + rho)",
                 static_cast<double>(std::llabs(static_cast<long long>(k.dim) - k.predicted)), k.dim == k.predicted});
  if (k.angle_to_E) out.push_back({s, "joint kernel = ker E (angle)", *k.angle_to_E, *k.angle_to_E < 1e-6});
}

}  // namespace

std::vector<CheckResult> run_suite(const CaseSpec& c, std::string_view suite, double tol) {
  const bool all = suite == "all";
  if (!all && suite != "clifford" && suite != "lemmas" && suite != "spectral" && suite != "scalar")
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");

  std::vector<CheckResult> out;
  if (suite == "scalar") {
    const auto s = scalar_spectral_check(c.n, c.q);
    add(out, "scalar", "-r^2 laplacian spectrum = k(2q-2k+n-2)", s.max_deviation, tol);
    flag(out, "scalar", "-r^2 laplacian eigenspace dims = dim H^{q-2k}", s.dims_match);
    return out;
  }
  const auto f = build_family(irrep(c.rho));
  if (all || suite == "clifford") clifford_checks(f, tol, out);
  if (all || suite == "lemmas")
    for (const auto& id : operator_identities(f, c.q)) add(out, "lemmas", id.name, id.deviation, tol);
  if (all || suite == "spectral") spectral_checks(f, c.q, tol, out);
  return out;
}

}  // namespace spinh
