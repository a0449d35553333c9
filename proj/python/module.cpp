#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "spinh/report.hpp"
#include "spinh/spectral.hpp"
#include "spinh/suites.hpp"

namespace py = pybind11;
using namespace spinh;

namespace {

py::object fraction(const Rational& r) {
  static const py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.numerator(), r.denominator());
}

DominantWeight weight(int n, const std::string& text) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  return text.empty() ? DominantWeight::zero(n) : parse_weight(n, text);
}

CliffordHomFamily family(int n, const std::string& rho) { return build_family(irrep(weight(n, rho))); }

void check_q(int q) {
  if (q < 0) throw std::invalid_argument("q must be non-negative");
}

py::dict spectrum_dict(const SpectralReport& s) {
  py::list rows;
  for (const auto& r : s.rows) {
    py::list mu;
    for (const auto& m : r.mu) mu.append(m.to_string());
    py::dict row;
    row["mu"] = mu;
    row["predicted"] = fraction(r.predicted);
    row["computed"] = r.computed;
    row["dim"] = r.dim;
    row["weyl_dim"] = r.weyl_dim;
    rows.append(row);
  }
  py::dict d;
  d["operator"] = s.op;
  d["rows"] = rows;
  d["eigenvalues"] = s.eigenvalues;
  d["max_deviation"] = s.max_deviation;
  d["min_eigenvalue"] = s.min_eigenvalue;
  d["leakage"] = s.leakage;
  d["laplacian_commutator"] = s.laplacian_commutator;
  d["nonneg"] = s.nonneg;
  d["dims_match"] = s.dims_match;
  d["merged"] = s.merged;
  d["ordered"] = s.ordered;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Clifford homomorphisms, invariant operators and their spectra on sections over R^n";

  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  m.def(
      "weyl_dim", [](int n, const std::string& w) { return weyl_dim(weight(n, w)); }, py::arg("n"),
      py::arg("weight"), "Dimension of the irreducible representation with the given highest weight");

  m.def(
      "conformal_weight",
      [](int n, const std::string& rho, const std::string& lambda) {
        return fraction(conformal_weight(weight(n, rho), weight(n, lambda)));
      },
      py::arg("n"), py::arg("rho"), py::arg("lam"), "Conformal weight of lambda in V_rho (x) R^n");

  m.def(
      "decompose",
      [](int n, const std::string& rho, int q) {
        check_q(q);
        const auto f = family(n, rho);
        py::list tensor;
        for (const auto& c : f.components) {
          py::dict row;
          row["lambda"] = c.lambda.to_string();
          row["conformal_weight"] = fraction(c.conformal_weight);
          row["weyl_dim"] = weyl_dim(c.lambda);
          tensor.append(row);
        }
        auto hws = highest_weights(harmonic_lift(f, q).rep);
        std::sort(hws.begin(), hws.end(), [](const auto& a, const auto& b) { return a.weight > b.weight; });
        py::list harmonic;
        for (const auto& h : hws) {
          py::dict row;
          row["mu"] = h.weight.to_string();
          row["multiplicity"] = h.multiplicity;
          row["weyl_dim"] = weyl_dim(h.weight);
          harmonic.append(row);
        }
        py::dict d;
        d["tensor_components"] = tensor;
        d["components"] = harmonic;
        return d;
      },
      py::arg("n"), py::arg("rho") = "", py::arg("q") = 0,
      "Components of V_rho (x) R^n and of H^q (x) V_rho");

  m.def(
      "spectrum",
      [](int n, const std::string& rho, int q, const std::string& op) {
        check_q(q);
        const auto f = family(n, rho);
        if (op == "E") return spectrum_dict(spectrum_E(f, q));
        if (op == "weighted") return spectrum_dict(spectrum_weighted(f, q));
        throw std::invalid_argument("operator must be 'E' or 'weighted'");
      },
      py::arg("n"), py::arg("rho"), py::arg("q"), py::arg("op") = "E",
      "Spectrum of an invariant operator on H^q (x) V_rho against its prediction");

  m.def(
      "e_matrix",
      [](int n, const std::string& rho, int q) {
        check_q(q);
        return build_E(family(n, rho), q).matrix;
      },
      py::arg("n"), py::arg("rho"), py::arg("q"),
      "E on S^q (x) V_rho as a scipy sparse matrix in the monomial (x) fiber basis");

  m.def(
      "kernel",
      [](int n, const std::string& rho, int q) {
        check_q(q);
        const auto k = kernel_intersection(family(n, rho), q);
        py::dict d;
        d["dim"] = k.dim;
        d["predicted"] = k.predicted;
        d["angle_to_E"] = k.angle_to_E ? py::cast(*k.angle_to_E) : py::none();
        return d;
      },
      py::arg("n"), py::arg("rho"), py::arg("q"), "Joint kernel of D_k, k >= 1, on H^q (x) V_rho");

  m.def(
      "quotient_dimensions",
      [](int n, int p, int q) {
        const auto r = quotient_dimensions(n, p, q);
        py::list entries;
        for (const auto& e : r.entries) {
          py::dict row;
          row["label"] = e.label;
          row["mu"] = e.mu ? py::cast(e.mu->to_string()) : py::none();
          row["computed"] = e.computed;
          row["predicted"] = e.predicted;
          entries.append(row);
        }
        py::dict d;
        d["total"] = r.total;
        d["ker_d"] = r.ker_d;
        d["ker_d_star"] = r.ker_d_star;
        d["intersection"] = r.intersection;
        d["entries"] = entries;
        return d;
      },
      py::arg("n"), py::arg("p"), py::arg("q"), "Closed and coclosed p-forms with harmonic coefficients of degree q");

  m.def(
      "verify",
      [](int n, const std::string& rho, int q, const std::string& suite, double tol) {
        check_q(q);
        py::list out;
        for (const auto& c : run_suite(CaseSpec{n, weight(n, rho), q}, suite, tol)) {
          py::dict row;
          row["suite"] = c.suite;
          row["name"] = c.name;
          row["deviation"] = c.deviation;
          row["passed"] = c.passed;
          out.append(row);
        }
        return out;
      },
      py::arg("n"), py::arg("rho") = "", py::arg("q") = 0, py::arg("suite") = "all", py::arg("tol") = 1e-8,
      "Run a check suite: clifford, lemmas, spectral, scalar or all");
}
