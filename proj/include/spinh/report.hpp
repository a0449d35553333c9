#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spinh/sections.hpp"
#include "spinh/spectral.hpp"

namespace spinh {

enum class Format { json, csv, text };
Format parse_format(std::string_view s);

struct CaseSpec {
  int n = 0;
  DominantWeight rho = DominantWeight::zero(3);
  int q = 0;
};

struct CheckResult {
  std::string suite;
  std::string name;
  double deviation = 0.0;
  bool passed = false;
};

struct DecompositionTable {
  CaseSpec c;
  std::vector<HighestWeight> tensor;  // V_rho (x) R^n
  std::vector<Rational> conformal;    // per tensor row
  std::vector<HighestWeight> harmonic;  // H^q (x) V_rho
};

std::string render_decomposition(const DecompositionTable& t, double elapsed_ms, Format f);
std::string render_spectrum(const CaseSpec& c, const SpectralReport& r, double elapsed_ms, Format f);
std::string render_checks(const CaseSpec& c, const std::vector<CheckResult>& checks, double elapsed_ms, Format f);
std::string render_kernel(const CaseSpec& c, const KernelReport& k, double elapsed_ms, Format f);

}  // namespace spinh
