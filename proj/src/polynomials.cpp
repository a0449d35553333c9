#include "spinh/polynomials.hpp"

#include <mutex>
#include <stdexcept>

namespace spinh {

namespace {

void fill(int n, int remaining, int var, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (var == n - 1) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = e;
    fill(n, remaining - e, var + 1, cur, out);
  }
}

}  // namespace

MonomialBasis::MonomialBasis(int n, int q) : n_(n), q_(q) {
  if (n < 1) throw std::invalid_argument("MonomialBasis needs n >= 1");
  if (q < 0) return;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  fill(n, q, 0, cur, exps_);
  for (std::size_t i = 0; i < exps_.size(); ++i) index_.emplace(exps_[i], static_cast<Index>(i));
}

Index MonomialBasis::index_of(const std::vector<int>& exps) const {
  auto it = index_.find(exps);
  return it == index_.end() ? -1 : it->second;
}

double MonomialBasis::fischer_norm_sq(Index i) const {
  double f = 1.0;
  for (int e : exponents(i))
    for (int k = 2; k <= e; ++k) f *= k;
  return f;
}

std::shared_ptr<const MonomialBasis> monomials(int n, int q) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>> cache;
  const std::lock_guard lock(mu);
  auto& slot = cache[{n, std::max(q, -1)}];
  if (!slot) slot = std::make_shared<const MonomialBasis>(n, q);
  return slot;
}

Index monomial_count(int n, int q) { return monomials(n, q)->size(); }

SpMat multiply_by(int n, int q, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
  const auto src = monomials(n, q);
  const auto dst = monomials(n, q + 1);
  std::vector<Eigen::Triplet<cplx>> trips;
  for (Index c = 0; c < src->size(); ++c) {
    auto e = src->exponents(c);
    e[i - 1] += 1;
    trips.emplace_back(dst->index_of(e), c, 1.0);
  }
  SpMat m(dst->size(), src->size());
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

SpMat differentiate(int n, int q, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
  const auto src = monomials(n, q);
  const auto dst = monomials(n, q - 1);
  std::vector<Eigen::Triplet<cplx>> trips;
  for (Index c = 0; c < src->size(); ++c) {
    auto e = src->exponents(c);
    const int a = e[i - 1];
    if (a == 0) continue;
    e[i - 1] -= 1;
    trips.emplace_back(dst->index_of(e), c, static_cast<double>(a));
  }
  SpMat m(dst->size(), src->size());
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

SpMat laplacian(int n, int q) {
  SpMat out(monomial_count(n, q - 2), monomial_count(n, q));
  for (int i = 1; i <= n; ++i) out -= SpMat(differentiate(n, q - 1, i) * differentiate(n, q, i));
  return out;
}

SpMat r_squared(int n, int q) {
  SpMat out(monomial_count(n, q + 2), monomial_count(n, q));
  for (int i = 1; i <= n; ++i) out += SpMat(multiply_by(n, q + 1, i) * multiply_by(n, q, i));
  return out;
}

RealVec fischer_norms(int n, int q) {
  const auto b = monomials(n, q);
  RealVec g(b->size());
  for (Index i = 0; i < b->size(); ++i) g(i) = b->fischer_norm_sq(i);
  return g;
}

}  // namespace spinh
