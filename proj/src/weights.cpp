#include "spinh/weights.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spinh {

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

std::string to_string(const WeightVector& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += to_string(w[i]);
  }
  return s + ")";
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

int weight_rank(int n) { return n / 2; }

namespace {

bool integral(const Rational& r) { return r.denominator() == 1; }
bool half_odd(const Rational& r) { return r.denominator() == 2; }

}  // namespace

bool is_dominant(int n, const WeightVector& w) {
  const int m = weight_rank(n);
  if (n < 2 || static_cast<int>(w.size()) != m || m == 0) return false;
  const bool all_int = std::all_of(w.begin(), w.end(), integral);
  const bool all_half = std::all_of(w.begin(), w.end(), half_odd);
  if (!all_int && !all_half) return false;
  for (int i = 0; i + 1 < m - 1; ++i)
    if (w[i] < w[i + 1]) return false;
  if (n % 2 == 1) {
    if (m >= 2 && w[m - 2] < w[m - 1]) return false;
    return w[m - 1] >= Rational(0);
  }
  if (m == 1) return true;  // n = 2: any integral or half-integral weight
  return w[m - 2] >= abs(w[m - 1]);
}

bool lex_greater(const WeightVector& a, const WeightVector& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

DominantWeight::DominantWeight(int n, WeightVector entries) : n_(n), entries_(std::move(entries)) {
  if (n < 3) throw std::invalid_argument("dimension must be at least 3, got " + std::to_string(n));
  if (static_cast<int>(entries_.size()) != weight_rank(n))
    throw std::invalid_argument("weight for n=" + std::to_string(n) + " needs " +
                                std::to_string(weight_rank(n)) + " entries, got " +
                                std::to_string(entries_.size()));
  if (!is_dominant(n, entries_))
    throw std::invalid_argument("weight " + spinh::to_string(entries_) + " is not dominant for n=" +
                                std::to_string(n));
}

DominantWeight DominantWeight::zero(int n) { return {n, WeightVector(static_cast<std::size_t>(weight_rank(n)), 0)}; }

bool DominantWeight::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r == Rational(0); });
}

bool DominantWeight::half_integral() const { return !entries_.empty() && half_odd(entries_[0]); }

std::strong_ordering DominantWeight::operator<=>(const DominantWeight& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  for (std::size_t i = 0; i < std::min(entries_.size(), o.entries_.size()); ++i) {
    if (entries_[i] < o.entries_[i]) return std::strong_ordering::less;
    if (o.entries_[i] < entries_[i]) return std::strong_ordering::greater;
  }
  return entries_.size() <=> o.entries_.size();
}

DominantWeight parse_weight(int n, std::string_view text) {
  WeightVector w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string tok(text.substr(pos, end - pos));
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) throw std::invalid_argument("empty entry in weight string '" + std::string(text) + "'");
    long long num = 0, den = 1;
    try {
      std::size_t used = 0;
      const auto slash = tok.find('/');
      num = std::stoll(tok.substr(0, slash), &used);
      if (used != (slash == std::string::npos ? tok.size() : slash)) throw std::invalid_argument(tok);
      if (slash != std::string::npos) {
        const std::string d = tok.substr(slash + 1);
        den = std::stoll(d, &used);
        if (used != d.size()) throw std::invalid_argument(tok);
      }
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed weight entry '" + tok + "'");
    }
    if (den <= 0) throw std::invalid_argument("non-positive denominator in '" + tok + "'");
    w.emplace_back(num, den);
    pos = end + 1;
  }
  return DominantWeight(n, std::move(w));
}

DominantWeight delta(int n) {
  if (n < 3) throw std::invalid_argument("delta requires n >= 3");
  const int m = weight_rank(n);
  WeightVector w;
  for (int i = 1; i <= m; ++i) {
    if (n % 2 == 1)
      w.emplace_back(2 * (m - i) + 1, 2);
    else
      w.emplace_back(m - i);
  }
  return {n, std::move(w)};
}

DominantWeight harmonic_weight(int n, int q) {
  if (q < 0) throw std::invalid_argument("degree must be non-negative");
  WeightVector w(static_cast<std::size_t>(weight_rank(n)), 0);
  w[0] = q;
  return {n, std::move(w)};
}

DominantWeight form_weight(int n, int p) {
  const int m = weight_rank(n);
  if (p < 0 || p > m) throw std::invalid_argument("form degree out of range 0..m");
  WeightVector w(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < p; ++i) w[i] = 1;
  return {n, std::move(w)};
}

DominantWeight spinor_weight(int n) {
  return {n, WeightVector(static_cast<std::size_t>(weight_rank(n)), Rational(1, 2))};
}

Rational norm_sq(const WeightVector& w) {
  Rational s = 0;
  for (const auto& x : w) s += x * x;
  return s;
}

WeightVector add(const WeightVector& a, const WeightVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight length mismatch");
  WeightVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Rational casimir_shift(const DominantWeight& v) {
  const auto d = delta(v.n()).entries();
  return norm_sq(add(v.entries(), d)) - norm_sq(d);
}

Rational casimir_eigenvalue(const DominantWeight& v) { return -casimir_shift(v) / 2; }

long long weyl_dim(const DominantWeight& v) {
  const int n = v.n();
  const int m = v.rank();
  const auto d = delta(n).entries();
  const auto shifted = add(v.entries(), d);
  Rational num = 1, den = 1;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      num *= (shifted[i] - shifted[j]) * (shifted[i] + shifted[j]);
      den *= (d[i] - d[j]) * (d[i] + d[j]);
    }
    if (n % 2 == 1) {
      num *= shifted[i];
      den *= d[i];
    }
  }
  const Rational dim = num / den;
  if (dim.denominator() != 1 || dim <= Rational(0))
    throw std::logic_error("Weyl dimension not a positive integer for " + v.to_string());
  return dim.numerator();
}

std::vector<DominantWeight> tensor_vector_components(const DominantWeight& rho) {
  const int n = rho.n();
  const int m = rho.rank();
  std::vector<DominantWeight> out;
  for (int j = 0; j < m; ++j)
    for (int sign : {1, -1}) {
      WeightVector w = rho.entries();
      w[j] += sign;
      if (is_dominant(n, w)) out.emplace_back(n, std::move(w));
    }
  if (n % 2 == 1 && rho[m - 1] != Rational(0)) out.push_back(rho);
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational conformal_weight(const DominantWeight& rho, const DominantWeight& lambda) {
  const auto comps = tensor_vector_components(rho);
  if (std::find(comps.begin(), comps.end(), lambda) == comps.end())
    throw std::invalid_argument(lambda.to_string() + " is not a component of " + rho.to_string() +
                                " (x) vector");
  return (casimir_shift(rho) + (rho.n() - 1) - casimir_shift(lambda)) / 2;
}

Rational m_mu_q(const DominantWeight& mu, const DominantWeight& rho, int q) {
  if (q < 0) throw std::invalid_argument("degree must be non-negative");
  if (mu.n() != rho.n()) throw std::invalid_argument("dimension mismatch");
  const auto d = delta(rho.n()).entries();
  const Rational qq = q;
  return (qq * qq + (rho.n() - 2) * qq + norm_sq(add(rho.entries(), d)) - norm_sq(add(mu.entries(), d))) / 2;
}

Rational e_eigenvalue(const DominantWeight& mu, const DominantWeight& rho, int q) {
  if (rho[0] == Rational(0)) throw std::invalid_argument("operator E is undefined for the trivial representation");
  return Rational(q) + m_mu_q(mu, rho, q) / rho[0];
}

Rational scalar_radial_eigenvalue(int n, int q, int k) {
  if (k < 0 || 2 * k > q) throw std::invalid_argument("need 0 <= 2k <= q");
  return Rational(2 * k * (2 * q - 2 * k + n - 2));
}

}  // namespace spinh
