// spinh: decomposition tables, spectra and identity checks for higher spin
// Dirac operators on polynomial sections.
//
// Exit codes: 0 all checks pass, 1 a numeric check failed, 2 invalid input.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "spinh/clifford_homs.hpp"
#include "spinh/report.hpp"
#include "spinh/sections.hpp"
#include "spinh/spectral.hpp"
#include "spinh/suites.hpp"

namespace {

using namespace spinh;

constexpr int kPass = 0;
constexpr int kNumeric = 1;
constexpr int kInvalid = 2;

struct Options {
  int n = 0;
  std::string rho;
  int q = 0;
  double tol = 1e-8;
  std::string format = "json";
  std::string suite = "all";
};

double default_tol() {
  if (const char* env = std::getenv("SPINH_TOL")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("SPINH_TOL is not a number: ") + env);
    }
  }
  return 1e-8;
}

CaseSpec make_case(const Options& o) {
  if (o.n < 3) throw std::invalid_argument("--n must be at least 3");
  if (o.q < 0) throw std::invalid_argument("--q must be non-negative");
  if (!(o.tol > 0)) throw std::invalid_argument("--tol must be positive");
  DominantWeight rho = o.rho.empty() ? DominantWeight::zero(o.n) : parse_weight(o.n, o.rho);
  return {o.n, std::move(rho), o.q};
}

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int cmd_decompose(const Options& o) {
  const auto c = make_case(o);
  const Timer t;
  const auto f = build_family(irrep(c.rho));
  DecompositionTable table{c, {}, {}, {}};
  for (const auto& comp : f.components) {
    table.tensor.push_back({comp.lambda, 1});
    table.conformal.push_back(comp.conformal_weight);
  }
  auto hws = highest_weights(harmonic_lift(f, c.q).rep);
  std::sort(hws.begin(), hws.end(), [](const auto& a, const auto& b) { return a.weight > b.weight; });
  table.harmonic = std::move(hws);
  std::cout << render_decomposition(table, t.ms(), parse_format(o.format));
  return kPass;
}

int cmd_spectrum(const Options& o) {
  const auto c = make_case(o);
  const Timer t;
  const auto f = build_family(irrep(c.rho));
  const auto r = spectrum_E(f, c.q);
  std::cout << render_spectrum(c, r, t.ms(), parse_format(o.format));
  return r.passed(o.tol, true) ? kPass : kNumeric;
}

int cmd_verify(const Options& o) {
  const auto c = make_case(o);
  const Timer t;
  const auto out = run_suite(c, o.suite, o.tol);
  std::cout << render_checks(c, out, t.ms(), parse_format(o.format));
  const bool ok = std::all_of(out.begin(), out.end(), [](const CheckResult& r) { return r.passed; });
  return ok ? kPass : kNumeric;
}

int cmd_kernel(const Options& o) {
  const auto c = make_case(o);
  const Timer t;
  const auto f = build_family(irrep(c.rho));
  const auto k = kernel_intersection(f, c.q);
  std::cout << render_kernel(c, k, t.ms(), parse_format(o.format));
  return k.dim == k.predicted ? kPass : kNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinh: higher spin Dirac operators on polynomial sections"};
  app.require_subcommand(1);
  Options o;
  try {
    o.tol = default_tol();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "dimension n >= 3")->required();
    sub->add_option("--rho", o.rho, "highest weight of V_rho, e.g. 1/2,1/2 (default trivial)");
    sub->add_option("--q", o.q, "polynomial degree")->capture_default_str();
    sub->add_option("--tol", o.tol, "tolerance (default 1e-8, or SPINH_TOL)");
    sub->add_option("--format", o.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
  };

  std::function<int(const Options&)> run;
  auto* dec = app.add_subcommand("decompose", "components of V_rho (x) R^n and H^q (x) V_rho");
  common(dec);
  dec->callback([&] { run = cmd_decompose; });
  auto* spec = app.add_subcommand("spectrum", "spectrum of E on H^q (x) V_rho");
  common(spec);
  spec->callback([&] { run = cmd_spectrum; });
  auto* ver = app.add_subcommand("verify", "run identity checks");
  common(ver);
  ver->add_option("--suite", o.suite, "all, clifford, lemmas, spectral or scalar")
      ->check(CLI::IsMember({"all", "clifford", "lemmas", "spectral", "scalar"}))
      ->capture_default_str();
  ver->callback([&] { run = cmd_verify; });
  auto* ker = app.add_subcommand("kernel", "joint kernel of D_k, k >= 1, on H^q (x) V_rho");
  common(ker);
  ker->callback([&] { run = cmd_kernel; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    return run(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const NumericalError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kNumeric;
  }
}
