// Acceptance run: one PASS/FAIL line per criterion, detail lines indented.
// Exit status is 0 only when every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "spinh/polynomials.hpp"
#include "spinh/sections.hpp"
#include "spinh/spectral.hpp"

using namespace spinh;

namespace {

constexpr double kEigTol = 1e-8;
constexpr double kOracleTol = 1e-10;
constexpr double kCompleteTol = 1e-9;
constexpr double kIdentityTol = 1e-10;
constexpr double kNonnegTol = 1e-9;
constexpr double kAngleTol = 1e-6;
constexpr double kEquivTol = 1e-8;
constexpr double kCaseSeconds = 10.0;

Rational r(long long a, long long b = 1) { return Rational(a, b); }

DominantWeight w(int n, std::initializer_list<Rational> e) { return DominantWeight(n, WeightVector(e)); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void detail(const std::string& s) { std::printf("    %s\n", s.c_str()); }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

struct Cluster {
  double mean;
  double lo, hi;
  Index dim;
};

// Eigenvalues grouped by gap: neighbours closer than 1e-6 (1 + |value|) share a cluster.
std::vector<Cluster> clusters(const RealVec& ev) {
  std::vector<double> v(ev.data(), ev.data() + ev.size());
  std::sort(v.begin(), v.end());
  std::vector<Cluster> out;
  for (double x : v) {
    if (!out.empty() && x - out.back().hi < 1e-6 * (1.0 + std::abs(x))) {
      auto& c = out.back();
      c.mean = (c.mean * static_cast<double>(c.dim) + x) / static_cast<double>(c.dim + 1);
      c.hi = x;
      ++c.dim;
    } else {
      out.push_back({x, x, x, 1});
    }
  }
  return out;
}

// Compares the clustered spectrum with expected (value, dim) pairs, ascending.
bool spectrum_is(const RealVec& ev, const std::vector<std::pair<Rational, long long>>& expect, double& worst,
                 std::string& got) {
  const auto cs = clusters(ev);
  got.clear();
  for (const auto& c : cs) got += (got.empty() ? "" : ", ") + fmt(c.mean) + ":" + std::to_string(c.dim);
  if (cs.size() != expect.size()) return false;
  bool ok = true;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const double e = to_double(expect[i].first);
    worst = std::max({worst, std::abs(cs[i].lo - e), std::abs(cs[i].hi - e)});
    ok = ok && std::abs(cs[i].lo - e) <= kEigTol && std::abs(cs[i].hi - e) <= kEigTol &&
         cs[i].dim == expect[i].second;
  }
  return ok;
}

std::string expect_string(const std::vector<std::pair<Rational, long long>>& e) {
  std::string s;
  for (const auto& [v, d] : e) s += (s.empty() ? "" : ", ") + to_string(v) + ":" + std::to_string(d);
  return s;
}

SpMat minus_x_dirac(int n, int q) {
  const auto g = gamma_matrices(n);
  const Index d = g.front().rows();
  SpMat out(monomial_count(n, q) * d, monomial_count(n, q) * d);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      out -= kron(SpMat(multiply_by(n, q - 1, i) * differentiate(n, q, j)), to_sparse(Mat(g[i - 1] * g[j - 1])));
  return out;
}

SpMat form_oracle(int n, int p, int q) {
  const Index d = static_cast<Index>(form_basis(n, p).size());
  SpMat out(monomial_count(n, q) * d, monomial_count(n, q) * d);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const SpMat xd = multiply_by(n, q - 1, i) * differentiate(n, q, j);
      SpMat fiber = interior_matrix(n, p + 1, i) * wedge_matrix(n, p, j);
      if (p > 0) fiber += wedge_matrix(n, p - 1, i) * interior_matrix(n, p, j);
      out += kron(xd, fiber);
    }
  return out;
}

struct GridRep {
  std::string name;
  GeneratorRep rep;
};

std::vector<GridRep> grid() {
  return {{"Delta n=5", spinor_rep(5)},       {"Delta n=7", spinor_rep(7)},
          {"Lambda^1 n=5", exterior_rep(5, 1)}, {"Lambda^1 n=7", exterior_rep(7, 1)},
          {"Lambda^2 n=5", exterior_rep(5, 2)}, {"Lambda^2 n=7", exterior_rep(7, 2)},
          {"trivial n=5", trivial_rep(5)},      {"trivial n=7", trivial_rep(7)},
          {"(2,0) n=5", irrep(w(5, {r(2), r(0)}))}};
}

struct Outcome {
  bool pass = true;
  std::string summary;
};

void report(int id, const std::string& title, const Outcome& o) {
  std::printf("%s  %2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.summary.c_str());
  std::fflush(stdout);
}

// Per (rho, q) results shared by several criteria.
struct CaseData {
  std::string name;
  int q;
  bool trivial;
  std::vector<IdentityCheck> identities;
  SpectralReport weighted;
  std::optional<SpectralReport> e;
  std::optional<KernelReport> kernel;
};

Outcome spinor_spectra() {
  Outcome o;
  double worst = 0.0, oracle = 0.0, slowest = 0.0;
  for (int n : {5, 7})
    for (int q : {1, 2, 3}) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto f = build_family(spinor_rep(n));
      const auto e = build_E(f, q);
      const auto s = spectrum_E(f, q);
      const double secs = seconds_since(t0);
      const double dev = relative_deviation(e.matrix, minus_x_dirac(n, q));
      const int m = weight_rank(n);
      WeightVector mu1(static_cast<std::size_t>(m), r(1, 2));
      mu1[0] = Rational(q) - r(1, 2);
      const std::vector<std::pair<Rational, long long>> expect{
          {r(0), weyl_dim(DominantWeight(n, add(harmonic_weight(n, q).entries(), spinor_weight(n).entries())))},
          {Rational(n + 2 * q - 2), weyl_dim(DominantWeight(n, mu1))}};
      std::string got;
      const bool ok = spectrum_is(s.eigenvalues, expect, worst, got) && dev < kOracleTol && secs < kCaseSeconds;
      oracle = std::max(oracle, dev);
      slowest = std::max(slowest, secs);
      if (!ok) {
        o.pass = false;
        detail("n=" + std::to_string(n) + " q=" + std::to_string(q) + ": got {" + got + "}, expected {" +
               expect_string(expect) + "}, E vs -xD " + fmt(dev) + ", " + fmt(secs) + " s");
      }
    }
  o.summary = "eigenvalue dev " + fmt(worst) + ", E vs -xD " + fmt(oracle) + ", slowest case " + fmt(slowest) + " s";
  return o;
}

Outcome form_spectra() {
  Outcome o;
  double worst = 0.0, oracle = 0.0;
  struct FormCase {
    int n, p, q;
    std::vector<Rational> values;
  };
  const std::vector<FormCase> cases{{7, 2, 2, {r(0), r(4), r(7), r(9)}}, {5, 1, 2, {r(0), r(3), r(6)}}};
  for (const auto& c : cases) {
    const auto f = build_family(exterior_rep(c.n, c.p));
    const double dev = relative_deviation(build_E(f, c.q).matrix, form_oracle(c.n, c.p, c.q));
    oracle = std::max(oracle, dev);
    const auto s = spectrum_E(f, c.q);
    // dims from the Weyl formula over the computed decomposition of H^q (x) Lambda^p,
    // paired with the stated eigenvalues in ascending order
    auto hws = highest_weights(harmonic_lift(f, c.q).rep);
    std::sort(hws.begin(), hws.end(), [](const auto& a, const auto& b) { return a.weight > b.weight; });
    std::vector<std::pair<Rational, long long>> expect;
    long long total = 0;
    for (std::size_t i = 0; i < c.values.size(); ++i)
      expect.push_back({c.values[i], i < hws.size() ? weyl_dim(hws[i].weight) : 0});
    for (const auto& hw : hws) total += hw.multiplicity * weyl_dim(hw.weight);
    const long long dim_total = weyl_dim(harmonic_weight(c.n, c.q)) * static_cast<long long>(form_basis(c.n, c.p).size());
    std::string got;
    const bool ok = spectrum_is(s.eigenvalues, expect, worst, got) && dev < kOracleTol && total == dim_total &&
                    s.eigenvalues.size() == dim_total;
    const std::string tag = "n=" + std::to_string(c.n) + " p=" + std::to_string(c.p) + " q=" + std::to_string(c.q);
    detail(tag + ": got {" + got + "}, expected {" + expect_string(expect) + "}, total " + std::to_string(total) +
           "/" + std::to_string(dim_total) + ", E vs i(x)d - x^d* " + fmt(dev));
    o.pass = o.pass && ok;
  }
  o.summary = "eigenvalue dev " + fmt(worst) + ", E vs i(x)d - x^d* " + fmt(oracle);
  return o;
}

Outcome completeness(const std::vector<std::pair<GridRep, CliffordHomFamily>>& fams) {
  Outcome o;
  double worst = 0.0;
  for (const auto& [g, f] : fams)
    for (int q = 0; q <= 2; ++q) {
      const double d = verify_completeness(f, q);
      worst = std::max(worst, d);
      if (!(d < kCompleteTol)) {
        o.pass = false;
        detail(g.name + " q=" + std::to_string(q) + ": " + fmt(d));
      }
    }
  o.summary = "max deviation " + fmt(worst) + " over " + std::to_string(fams.size()) + " reps, q = 0, 1, 2";
  return o;
}

Outcome identities(const std::vector<CaseData>& cases) {
  Outcome o;
  double worst = 0.0;
  std::size_t count = 0;
  for (const auto& c : cases)
    for (const auto& id : c.identities) {
      ++count;
      worst = std::max(worst, id.deviation);
      if (!(id.deviation < kIdentityTol)) {
        o.pass = false;
        detail(c.name + " q=" + std::to_string(c.q) + " " + id.name + ": " + fmt(id.deviation));
      }
    }
  o.summary = "max deviation " + fmt(worst) + " over " + std::to_string(count) + " checks";
  return o;
}

Outcome weighted(const std::vector<CaseData>& cases) {
  Outcome o;
  double worst = 0.0;
  for (const auto& c : cases) {
    worst = std::max(worst, c.weighted.max_deviation);
    if (!(c.weighted.max_deviation <= kEigTol && c.weighted.dims_match)) {
      o.pass = false;
      detail(c.name + " q=" + std::to_string(c.q) + ": dev " + fmt(c.weighted.max_deviation) +
             (c.weighted.dims_match ? "" : ", dims differ"));
    }
  }
  o.summary = "max deviation " + fmt(worst) + " over " + std::to_string(cases.size()) + " cases";
  return o;
}

Outcome nonnegativity(const std::vector<CaseData>& cases) {
  Outcome o;
  double lowest = 0.0;
  std::size_t count = 0;
  for (const auto& c : cases) {
    if (!c.e) continue;
    ++count;
    const auto& e = *c.e;
    lowest = std::min(lowest, e.min_eigenvalue);
    Index zero = 0;
    for (Index i = 0; i < e.eigenvalues.size(); ++i) zero += std::abs(e.eigenvalues(i)) < 1e-6;
    const DominantWeight mu0(e.n, add(harmonic_weight(e.n, c.q).entries(), e.rho.entries()));
    const bool ok = e.min_eigenvalue >= -kNonnegTol && zero == weyl_dim(mu0);
    if (!ok) {
      o.pass = false;
      detail(c.name + " q=" + std::to_string(c.q) + ": min " + fmt(e.min_eigenvalue) + ", zero dim " +
             std::to_string(zero) + " vs " + std::to_string(weyl_dim(mu0)));
    }
  }
  o.summary = "lowest eigenvalue " + fmt(lowest) + " over " + std::to_string(count) + " cases";
  return o;
}

Outcome joint_kernels(const std::vector<CaseData>& cases) {
  Outcome o;
  double worst = 0.0;
  std::size_t count = 0;
  for (const auto& c : cases) {
    if (!c.kernel) continue;
    ++count;
    const auto& k = *c.kernel;
    const double angle = k.angle_to_E.value_or(1.0);
    worst = std::max(worst, angle);
    if (!(k.dim == k.predicted && angle < kAngleTol)) {
      o.pass = false;
      detail(c.name + " q=" + std::to_string(c.q) + ": dim " + std::to_string(k.dim) + " vs " +
             std::to_string(k.predicted) + ", angle " + fmt(angle));
    }
  }
  o.summary = "largest principal angle " + fmt(worst) + " over " + std::to_string(count) + " cases";
  return o;
}

Outcome scalar() {
  Outcome o;
  double worst = 0.0;
  for (auto [n, q] : {std::pair{5, 2}, {5, 4}, {3, 4}}) {
    const auto s = scalar_spectral_check(n, q);
    std::string line = "n=" + std::to_string(n) + " q=" + std::to_string(q) + ":";
    for (const auto& l : s.levels)
      line += " k=" + std::to_string(l.k) + " " + fmt(l.computed) + " vs " + to_string(l.predicted) + " (dim " +
              std::to_string(l.dim) + "/" + std::to_string(l.expected_dim) + ")";
    worst = std::max(worst, s.max_deviation);
    const bool ok = s.max_deviation <= kEigTol && s.dims_match;
    if (!ok) detail(line);
    o.pass = o.pass && ok;
  }
  o.summary = "max deviation " + fmt(worst);
  return o;
}

Outcome quotients() {
  Outcome o;
  const auto q = quotient_dimensions(7, 2, 2);
  for (const auto& e : q.entries) {
    const bool ok = e.computed == e.predicted;
    detail(e.label + ": " + std::to_string(e.computed) + " vs weyl_dim" + (e.mu ? e.mu->to_string() : "(absent)") +
           " = " + std::to_string(e.predicted));
    o.pass = o.pass && ok;
  }
  detail("ker d " + std::to_string(q.ker_d) + ", ker d* " + std::to_string(q.ker_d_star) + ", cap " +
         std::to_string(q.intersection) + ", total " + std::to_string(q.total) + ", d and d* scale deviations " +
         fmt(q.d_scale_deviation) + ", " + fmt(q.d_star_scale_deviation));
  o.summary = "n=7 p=2 q=2";
  return o;
}

Outcome structure(const std::vector<std::pair<GridRep, CliffordHomFamily>>& fams) {
  Outcome o;
  double equiv = 0.0;
  const double ts[] = {0.3, 1.0};
  std::size_t sign_failures = 0;
  for (const auto& [g, f] : fams) {
    const auto top = tensor_vector_components(f.rho).front();
    const Rational m = conformal_weight(f.rho, top);
    if (m != f.rho[0]) {
      ++sign_failures;
      o.pass = false;
      detail(g.name + ": conformal_weight(rho, rho+e1) = " + to_string(m) + ", rho^1 = " + to_string(f.rho[0]));
    }
    auto iso = isotypic_decomposition(tensor_rep(f.rho_rep, vector_rep(f.n)));
    std::sort(iso.begin(), iso.end(), [](const auto& a, const auto& b) { return a.weight > b.weight; });
    const auto rule = tensor_vector_components(f.rho);
    bool match = iso.size() == rule.size();
    for (std::size_t k = 0; match && k < iso.size(); ++k) match = iso[k].weight == rule[k] && iso[k].multiplicity == 1;
    if (!match) {
      o.pass = false;
      detail(g.name + ": isotypic decomposition disagrees with the selection rule");
    }
    const double a = verify_equivariance(f), b = verify_group_equivariance(f, ts);
    equiv = std::max({equiv, a, b});
    if (!(a < kEquivTol && b < kEquivTol)) {
      o.pass = false;
      detail(g.name + ": equivariance " + fmt(a) + ", group " + fmt(b));
    }
  }
  o.summary = "conformal weight mismatches " + std::to_string(sign_failures) + "/" + std::to_string(fams.size()) +
              ", equivariance " + fmt(equiv);
  return o;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  bool all = true;
  const auto run = [&](int id, const std::string& title, const std::function<Outcome()>& fn) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    report(id, title, o);
    all = all && o.pass;
  };

  run(1, "spinor-valued spectra {0, n+2q-2}", spinor_spectra);
  run(2, "form-valued spectra", form_spectra);

  std::vector<std::pair<GridRep, CliffordHomFamily>> fams;
  for (auto& g : grid()) {
    auto f = build_family(g.rep);
    fams.emplace_back(std::move(g), std::move(f));
  }
  std::vector<CaseData> cases;
  for (const auto& [g, f] : fams)
    for (int q = 1; q <= 3; ++q) {
      CaseData c{g.name, q, f.rho.is_zero(), operator_identities(f, q), spectrum_weighted(f, q), {}, {}};
      if (!c.trivial) {
        c.e = spectrum_E(f, q);
        c.kernel = kernel_intersection(f, q);
      }
      cases.push_back(std::move(c));
    }

  run(3, "completeness for q = 0, 1, 2", [&] { return completeness(fams); });
  run(4, "operator identities", [&] { return identities(cases); });
  run(5, "weighted operator spectrum m(mu,q)", [&] { return weighted(cases); });
  run(6, "E non-negative with top zero eigenspace", [&] { return nonnegativity(cases); });
  run(7, "joint kernel of D_k equals ker E", [&] { return joint_kernels(cases); });
  run(8, "scalar spectrum of -r^2 laplacian", scalar);
  run(9, "quotient dimensions", quotients);
  run(10, "structural invariants", [&] { return structure(fams); });

  std::printf("total %.1f s\n", seconds_since(t0));
  return all ? 0 : 1;
}
