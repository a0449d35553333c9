#include "spinh/clifford.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace spinh {

namespace {

void check_dim(int n) {
  if (n < 1 || n > kMaxCliffordDim)
    throw std::invalid_argument("Clifford dimension out of range: " + std::to_string(n));
}

void check_same(const CliffordElement& a, const CliffordElement& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("Clifford dimension mismatch: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
}

Blade mask_of(int n, const std::vector<int>& indices) {
  Blade b = 0;
  int prev = 0;
  for (int i : indices) {
    if (i <= prev || i > n) throw std::invalid_argument("blade indices must be strictly increasing in 1..n");
    b |= Blade{1} << (i - 1);
    prev = i;
  }
  return b;
}

}  // namespace

CliffordElement::CliffordElement(int n) : n_(n) { check_dim(n); }

CliffordElement CliffordElement::scalar(int n, cplx value) {
  CliffordElement e(n);
  e.add_term(0, value);
  return e;
}

CliffordElement CliffordElement::basis_vector(int n, int i) { return blade(n, {i}); }

CliffordElement CliffordElement::blade(int n, const std::vector<int>& indices, cplx coeff) {
  CliffordElement e(n);
  e.add_term(mask_of(n, indices), coeff);
  return e;
}

CliffordElement CliffordElement::vector(int n, const RealVec& v) {
  if (v.size() != n) throw std::invalid_argument("vector length must equal n");
  CliffordElement e(n);
  for (int i = 0; i < n; ++i) e.add_term(Blade{1} << i, v(i));
  return e;
}

cplx CliffordElement::coeff(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? cplx{} : it->second;
}

cplx CliffordElement::coeff(const std::vector<int>& indices) const { return coeff(mask_of(n_, indices)); }

void CliffordElement::add_term(Blade b, cplx c) {
  if (c == cplx{}) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cplx{}) terms_.erase(it);
  }
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  check_same(*this, o);
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  check_same(*this, o);
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

CliffordElement& CliffordElement::operator*=(cplx s) {
  if (s == cplx{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

CliffordElement CliffordElement::pruned(double tol) const {
  CliffordElement out(n_);
  for (const auto& [b, c] : terms_)
    if (std::abs(c) > tol) out.terms_.emplace(b, c);
  return out;
}

CliffordElement CliffordElement::grade(int k) const {
  CliffordElement out(n_);
  for (const auto& [b, c] : terms_)
    if (std::popcount(b) == k) out.terms_.emplace(b, c);
  return out;
}

Vec CliffordElement::vector_part() const {
  Vec v = Vec::Zero(n_);
  for (const auto& [b, c] : terms_)
    if (std::popcount(b) == 1) v(std::countr_zero(b)) = c;
  return v;
}

bool CliffordElement::approx_equal(const CliffordElement& o, double tol) const {
  check_same(*this, o);
  CliffordElement d = *this;
  d -= o;
  for (const auto& [b, c] : d.terms_)
    if (std::abs(c) > tol) return false;
  return true;
}

bool CliffordElement::operator==(const CliffordElement& o) const {
  return n_ == o.n_ && pruned().terms_ == o.pruned().terms_;
}

std::string CliffordElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.real();
    if (c.imag() != 0.0) os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << 'i';
    os << ')';
    for (int i = 0; i < n_; ++i)
      if (b & (Blade{1} << i)) os << "e" << (i + 1);
  }
  return os.str();
}

CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
CliffordElement operator*(cplx s, CliffordElement a) { return a *= s; }
CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) { return clifford_product(a, b); }

int blade_sign(Blade a, Blade b) {
  // Moving each factor of b leftwards past the factors of a with larger index.
  int swaps = 0;
  for (Blade rest = b; rest; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    swaps += std::popcount(a >> (i + 1));
  }
  swaps += std::popcount(a & b);  // e_i e_i = -1
  return (swaps & 1) ? -1 : 1;
}

CliffordElement clifford_product(const CliffordElement& a, const CliffordElement& b) {
  check_same(a, b);
  CliffordElement out(a.dim());
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) out.add_term(ba ^ bb, static_cast<double>(blade_sign(ba, bb)) * ca * cb);
  return out;
}

CliffordElement commutator(const CliffordElement& a, const CliffordElement& b) { return a * b - b * a; }

CliffordElement generator(int i, int j, int n) {
  check_dim(n);
  if (i == j) throw std::invalid_argument("generator requires i != j");
  if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("generator index out of range");
  if (i > j) throw std::invalid_argument("generator requires i < j");
  return commutator(CliffordElement::basis_vector(n, i), CliffordElement::basis_vector(n, j));
}

CliffordElement exp(const CliffordElement& a) {
  const int n = a.dim();
  CliffordElement sum = CliffordElement::scalar(n, 1.0);
  CliffordElement term = CliffordElement::scalar(n, 1.0);
  for (int k = 1; k < 200; ++k) {
    term = (1.0 / k) * (term * a);
    sum += term;
    double biggest = 0.0;
    for (const auto& [b, c] : term.terms()) biggest = std::max(biggest, std::abs(c));
    if (biggest < 1e-18) break;
  }
  return sum;
}

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_index(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("pair_index requires 1 <= i < j <= n");
  // pairs with first index < i, then offset within row i
  return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

std::pair<int, int> pair_at(int n, int index) {
  for (int i = 1; i < n; ++i) {
    const int row = n - i;
    if (index < row) return {i, i + 1 + index};
    index -= row;
  }
  throw std::out_of_range("pair index out of range");
}

Vec generator_coordinates(const CliffordElement& bivector, double tol) {
  const int n = bivector.dim();
  Vec coords = Vec::Zero(pair_count(n));
  for (const auto& [b, c] : bivector.terms()) {
    if (std::popcount(b) != 2) {
      if (std::abs(c) > tol) throw std::invalid_argument("element is not a pure bivector");
      continue;
    }
    const int i = std::countr_zero(b) + 1;
    const int j = std::bit_width(b);
    // e_i e_j = [e_i,e_j] / 2
    coords(pair_index(n, i, j)) = c / 2.0;
  }
  return coords;
}

}  // namespace spinh
