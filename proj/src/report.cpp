#include "spinh/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace spinh {

using nlohmann::ordered_json;

Format parse_format(std::string_view s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

namespace {

ordered_json case_json(const CaseSpec& c) {
  return {{"n", c.n}, {"rho", c.rho.to_string()}, {"q", c.q}};
}

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::string mu_string(const std::vector<DominantWeight>& mu) {
  std::string s;
  for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "+" : "") + mu[i].to_string();
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
    os << '\n';
  }
  return os.str();
}

std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "  " : "") << std::left << std::setw(static_cast<int>(w[i])) << r[i];
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

std::string case_line(const CaseSpec& c) {
  return "n=" + std::to_string(c.n) + " rho=" + c.rho.to_string() + " q=" + std::to_string(c.q) + "\n";
}

}  // namespace

std::string render_decomposition(const DecompositionTable& t, double elapsed_ms, Format f) {
  const std::vector<std::string> th{"lambda", "conformal_weight", "weyl_dim"};
  const std::vector<std::string> hh{"mu", "multiplicity", "weyl_dim"};
  std::vector<std::vector<std::string>> tr, hr;
  for (std::size_t k = 0; k < t.tensor.size(); ++k)
    tr.push_back({t.tensor[k].weight.to_string(), to_string(t.conformal[k]),
                  std::to_string(weyl_dim(t.tensor[k].weight))});
  for (const auto& h : t.harmonic)
    hr.push_back({h.weight.to_string(), std::to_string(h.multiplicity), std::to_string(weyl_dim(h.weight))});

  switch (f) {
    case Format::json: {
      ordered_json j;
      j["case"] = case_json(t.c);
      j["tensor_components"] = ordered_json::array();
      for (const auto& r : tr)
        j["tensor_components"].push_back({{"lambda", r[0]}, {"conformal_weight", r[1]}, {"weyl_dim", std::stoll(r[2])}});
      j["components"] = ordered_json::array();
      for (const auto& r : hr)
        j["components"].push_back({{"mu", r[0]}, {"multiplicity", std::stoi(r[1])}, {"weyl_dim", std::stoll(r[2])}});
      j["elapsed_ms"] = elapsed_ms;
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : tr) rows.push_back({"tensor", r[0], r[1], "1", r[2]});
      for (const auto& r : hr) rows.push_back({"harmonic", r[0], "", r[1], r[2]});
      return csv({"space", "weight", "conformal_weight", "multiplicity", "weyl_dim"}, rows);
    }
    case Format::text:
      return case_line(t.c) + "V_rho (x) R^n:\n" + table(th, tr) + "H^q (x) V_rho:\n" + table(hh, hr);
  }
  return {};
}

std::string render_spectrum(const CaseSpec& c, const SpectralReport& r, double elapsed_ms, Format f) {
  const std::vector<std::string> header{"mu", "predicted", "computed", "dim", "weyl_dim"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : r.rows)
    rows.push_back({mu_string(row.mu), to_string(row.predicted), num(row.computed), std::to_string(row.dim),
                    std::to_string(row.weyl_dim)});
  switch (f) {
    case Format::json: {
      ordered_json j;
      j["case"] = case_json(c);
      j["operator"] = r.op;
      j["components"] = ordered_json::array();
      for (const auto& row : r.rows) {
        ordered_json o{{"mu", row.mu.front().to_string()},
                       {"predicted", to_string(row.predicted)},
                       {"computed", row.computed},
                       {"dim", row.dim},
                       {"weyl_dim", row.weyl_dim}};
        if (row.mu.size() > 1) {
          o["merged_with"] = ordered_json::array();
          for (std::size_t i = 1; i < row.mu.size(); ++i) o["merged_with"].push_back(row.mu[i].to_string());
        }
        j["components"].push_back(o);
      }
      j["max_deviation"] = r.max_deviation;
      j["min_eigenvalue"] = r.min_eigenvalue;
      j["nonneg"] = r.nonneg;
      j["dims_match"] = r.dims_match;
      j["merged"] = r.merged;
      j["ordered"] = r.ordered;
      j["leakage"] = r.leakage;
      j["elapsed_ms"] = elapsed_ms;
      return j.dump(2) + "\n";
    }
    case Format::csv:
      return csv(header, rows);
    case Format::text: {
      std::ostringstream os;
      os << case_line(c) << "operator " << r.op << "\n" << table(header, rows);
      os << "max_deviation " << num(r.max_deviation) << "\nmin_eigenvalue " << num(r.min_eigenvalue)
         << "\nnonneg " << (r.nonneg ? "yes" : "no") << "\ndims_match " << (r.dims_match ? "yes" : "no")
         << "\nmerged " << (r.merged ? "yes" : "no") << "\nordered " << (r.ordered ? "yes" : "no") << "\n";
      return os.str();
    }
  }
  return {};
}

std::string render_checks(const CaseSpec& c, const std::vector<CheckResult>& checks, double elapsed_ms, Format f) {
  double worst = 0.0;
  for (const auto& ch : checks) worst = std::max(worst, ch.deviation);
  const std::vector<std::string> header{"suite", "check", "deviation", "status"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& ch : checks) rows.push_back({ch.suite, ch.name, num(ch.deviation), ch.passed ? "PASS" : "FAIL"});
  switch (f) {
    case Format::json: {
      ordered_json j;
      j["case"] = case_json(c);
      j["checks"] = ordered_json::array();
      for (const auto& ch : checks)
        j["checks"].push_back({{"suite", ch.suite}, {"name", ch.name}, {"deviation", ch.deviation}, {"passed", ch.passed}});
      j["max_deviation"] = worst;
      j["elapsed_ms"] = elapsed_ms;
      return j.dump(2) + "\n";
    }
    case Format::csv:
      return csv(header, rows);
    case Format::text:
      return case_line(c) + table(header, rows) + "max_deviation " + num(worst) + "\n";
  }
  return {};
}

std::string render_kernel(const CaseSpec& c, const KernelReport& k, double elapsed_ms, Format f) {
  switch (f) {
    case Format::json: {
      ordered_json j;
      j["case"] = case_json(c);
      j["dim"] = k.dim;
      j["predicted"] = k.predicted;
      j["angle_to_E"] = k.angle_to_E ? ordered_json(*k.angle_to_E) : ordered_json(nullptr);
      j["elapsed_ms"] = elapsed_ms;
      return j.dump(2) + "\n";
    }
    case Format::csv:
      return csv({"dim", "predicted", "angle_to_E"},
                 {{std::to_string(k.dim), std::to_string(k.predicted), k.angle_to_E ? num(*k.angle_to_E) : ""}});
    case Format::text:
      return case_line(c) + "joint kernel dim " + std::to_string(k.dim) + ", predicted " +
             std::to_string(k.predicted) + (k.angle_to_E ? ", angle to ker E " + num(*k.angle_to_E) : "") + "\n";
  }
  return {};
}

}  // namespace spinh
