#include "spinh/reps.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "spinh/clifford.hpp"
#include "spinh/polynomials.hpp"

namespace spinh {

const SpMat& GeneratorRep::gen(int i, int j) const { return gens.at(static_cast<std::size_t>(pair_index(n, i, j))); }

SpMat GeneratorRep::action(int i, int j) const {
  if (i == j) return SpMat(dim, dim);
  if (i < j) return gen(i, j);
  return -gen(j, i);
}

namespace {

GeneratorRep make_rep(int n, Index dim) {
  GeneratorRep r;
  r.n = n;
  r.dim = dim;
  r.gens.assign(static_cast<std::size_t>(pair_count(n)), SpMat(dim, dim));
  r.inner = sparse_identity(dim);
  r.orthonormal = true;
  return r;
}

void require_n(int n) {
  if (n < 3) throw std::invalid_argument("representations need n >= 3");
}

// Sorts idx in place, returning the permutation sign; 0 on a repeated index.
int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
      if (idx[j] == idx[j + 1]) return 0;
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
    }
  for (std::size_t j = 0; j + 1 < idx.size(); ++j)
    if (idx[j] == idx[j + 1]) return 0;
  return sign;
}

}  // namespace

GeneratorRep trivial_rep(int n) {
  require_n(n);
  auto r = make_rep(n, 1);
  r.label = DominantWeight::zero(n);
  return r;
}

GeneratorRep vector_rep(int n) {
  require_n(n);
  auto r = make_rep(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      SpMat g(n, n);
      g.insert(j - 1, i - 1) = 4.0;
      g.insert(i - 1, j - 1) = -4.0;
      r.gens[static_cast<std::size_t>(pair_index(n, i, j))] = g;
    }
  r.label = form_weight(n, 1);
  return r;
}

std::vector<Mat> gamma_matrices(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("gamma_matrices: only odd n >= 3 is supported");
  const cplx I(0.0, 1.0);
  Mat sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, -I, I, 0;
  sz << 1, 0, 0, -1;
  // Hermitian generators squaring to +1, extended two dimensions at a time.
  std::vector<Mat> herm{sx, sy, sz};
  for (int d = 3; d < n; d += 2) {
    const Index dim = herm.front().rows();
    const Mat id = Mat::Identity(dim, dim);
    std::vector<Mat> next;
    for (const auto& g : herm) next.push_back(Eigen::kroneckerProduct(g, sx).eval());
    next.push_back(Eigen::kroneckerProduct(id, sy).eval());
    next.push_back(Eigen::kroneckerProduct(id, sz).eval());
    herm = std::move(next);
  }
  std::vector<Mat> gammas;
  for (const auto& g : herm) gammas.push_back(I * g);
  return gammas;
}

GeneratorRep spinor_rep(int n) {
  const auto g = gamma_matrices(n);
  const Index dim = g.front().rows();
  auto r = make_rep(n, dim);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      r.gens[static_cast<std::size_t>(pair_index(n, i, j))] =
          to_sparse(g[i - 1] * g[j - 1] - g[j - 1] * g[i - 1], 1e-15);
  r.label = spinor_weight(n);
  return r;
}

std::vector<std::vector<int>> form_basis(int n, int p) {
  std::vector<std::vector<int>> out;
  if (p < 0 || p > n) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

namespace {

std::map<std::vector<int>, Index> index_forms(const std::vector<std::vector<int>>& basis) {
  std::map<std::vector<int>, Index> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], static_cast<Index>(i));
  return idx;
}

}  // namespace

SpMat wedge_matrix(int n, int p, int i) {
  const auto src = form_basis(n, p);
  const auto dst = form_basis(n, p + 1);
  const auto dst_idx = index_forms(dst);
  std::vector<Eigen::Triplet<cplx>> trips;
  for (std::size_t c = 0; c < src.size(); ++c) {
    std::vector<int> idx{i};
    idx.insert(idx.end(), src[c].begin(), src[c].end());
    const int s = sort_with_sign(idx);
    if (s == 0) continue;
    trips.emplace_back(dst_idx.at(idx), static_cast<Index>(c), static_cast<double>(s));
  }
  SpMat m(static_cast<Index>(dst.size()), static_cast<Index>(src.size()));
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

SpMat interior_matrix(int n, int p, int i) {
  // adjoint of wedge in the orthonormal wedge basis
  return SpMat(wedge_matrix(n, p - 1, i).adjoint());
}

GeneratorRep exterior_rep(int n, int p) {
  require_n(n);
  if (p < 0 || p > weight_rank(n)) throw std::invalid_argument("exterior_rep: p must lie in 0..floor(n/2)");
  const auto basis = form_basis(n, p);
  const auto idx = index_forms(basis);
  const auto vec = vector_rep(n);
  auto r = make_rep(n, static_cast<Index>(basis.size()));
  for (int pi = 0; pi < pair_count(n); ++pi) {
    const Mat v = Mat(vec.gens[static_cast<std::size_t>(pi)]);
    std::vector<Eigen::Triplet<cplx>> trips;
    for (std::size_t c = 0; c < basis.size(); ++c) {
      // derivation: act on one factor at a time
      for (std::size_t s = 0; s < basis[c].size(); ++s) {
        const int a = basis[c][s];
        for (int b = 1; b <= n; ++b) {
          const cplx coef = v(b - 1, a - 1);
          if (coef == cplx{}) continue;
          auto img = basis[c];
          img[s] = b;
          const int sign = sort_with_sign(img);
          if (sign == 0) continue;
          trips.emplace_back(idx.at(img), static_cast<Index>(c), static_cast<double>(sign) * coef);
        }
      }
    }
    SpMat g(r.dim, r.dim);
    g.setFromTriplets(trips.begin(), trips.end());
    r.gens[static_cast<std::size_t>(pi)] = g;
  }
  if (n % 2 == 1 || p < weight_rank(n)) r.label = form_weight(n, p);
  return r;
}

GeneratorRep poly_rep(int n, int q) {
  require_n(n);
  if (q < 0) throw std::invalid_argument("poly_rep: negative degree");
  auto r = make_rep(n, monomial_count(n, q));
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) {
      SpMat g = 4.0 * SpMat(multiply_by(n, q - 1, l) * differentiate(n, q, k)) -
                4.0 * SpMat(multiply_by(n, q - 1, k) * differentiate(n, q, l));
      if (q == 0) g = SpMat(r.dim, r.dim);
      r.gens[static_cast<std::size_t>(pair_index(n, k, l))] = g;
    }
  const RealVec norms = fischer_norms(n, q);
  std::vector<Eigen::Triplet<cplx>> trips;
  for (Index i = 0; i < norms.size(); ++i) trips.emplace_back(i, i, norms(i));
  r.inner = SpMat(r.dim, r.dim);
  r.inner.setFromTriplets(trips.begin(), trips.end());
  r.orthonormal = (norms.array() == 1.0).all();
  if (q <= 1) r.label = harmonic_weight(n, q);
  return r;
}

HarmonicSpace harmonic_subspace(int n, int q, double tol) {
  const auto poly = poly_rep(n, q);
  const RealVec norms = fischer_norms(n, q);
  const RealVec scale = norms.cwiseSqrt();
  // Laplacian in Fischer-orthonormal coordinates on the domain
  const Mat lap = Mat(laplacian(n, q)) * scale.cwiseInverse().asDiagonal();
  const Mat kernel = null_space(lap, tol);
  HarmonicSpace h;
  h.embedding = scale.cwiseInverse().asDiagonal() * kernel;
  auto r = make_rep(n, kernel.cols());
  for (std::size_t p = 0; p < poly.gens.size(); ++p) {
    const Mat gm = kernel.adjoint() * scale.asDiagonal() * (poly.gens[p] * h.embedding);
    r.gens[p] = to_sparse(gm, 1e-14);
  }
  r.label = harmonic_weight(n, q);
  // Rotate to a weight basis so tensor products keep a block-sparse Cartan.
  Mat u(r.dim, 0);
  for (const auto& ws : cartan_weight_data(r, tol)) u = hstack(u, ws.basis);
  h.embedding = h.embedding * u;
  for (auto& g : r.gens) g = to_sparse(Mat(u.adjoint() * (g * u)), 1e-13);
  h.rep = std::move(r);
  return h;
}

GeneratorRep tensor_rep(const GeneratorRep& a, const GeneratorRep& b) {
  if (a.n != b.n) throw std::invalid_argument("tensor_rep: representations of different spin(n)");
  auto r = make_rep(a.n, a.dim * b.dim);
  const SpMat ia = sparse_identity(a.dim);
  const SpMat ib = sparse_identity(b.dim);
  for (std::size_t p = 0; p < r.gens.size(); ++p) r.gens[p] = kron(a.gens[p], ib) + kron(ia, b.gens[p]);
  r.inner = kron(a.inner, b.inner);
  r.orthonormal = a.orthonormal && b.orthonormal;
  if (a.label && a.label->is_zero()) r.label = b.label;
  if (b.label && b.label->is_zero()) r.label = a.label;
  return r;
}

Mat orthonormal_frame(const GeneratorRep& rep) {
  if (rep.orthonormal) return Mat::Identity(rep.dim, rep.dim);
  const Mat gram = Mat(rep.inner);
  Eigen::LLT<Mat> llt(gram);
  if (llt.info() != Eigen::Success) throw NumericalError("inner product is not positive definite");
  // gram = L L^*, frame = L^{-*}
  const Mat l = llt.matrixL();
  return l.adjoint().triangularView<Eigen::Upper>().solve(Mat::Identity(rep.dim, rep.dim));
}

GeneratorRep orthonormalized(const GeneratorRep& rep) {
  if (rep.orthonormal) return rep;
  const Mat frame = orthonormal_frame(rep);
  const Mat left = frame.adjoint() * Mat(rep.inner);  // inverse of frame
  auto r = make_rep(rep.n, rep.dim);
  for (std::size_t p = 0; p < r.gens.size(); ++p) r.gens[p] = to_sparse(left * (rep.gens[p] * frame), 1e-14);
  r.label = rep.label;
  return r;
}

GeneratorRep restrict_rep(const GeneratorRep& rep, const Mat& basis, double tol) {
  if (!rep.orthonormal) throw std::invalid_argument("restrict_rep expects an orthonormal representation");
  auto r = make_rep(rep.n, basis.cols());
  for (std::size_t p = 0; p < r.gens.size(); ++p) {
    const Mat gb = rep.gens[p] * basis;
    const Mat small = basis.adjoint() * gb;
    const double leak = max_abs(Mat(gb - basis * small));
    if (leak > tol * std::max(1.0, max_abs(gb)))
      throw NumericalError("restrict_rep: subspace is not invariant (leakage " + std::to_string(leak) + ")");
    r.gens[p] = to_sparse(small, 1e-14);
  }
  return r;
}

SpMat casimir(const GeneratorRep& rep) {
  SpMat c(rep.dim, rep.dim);
  for (const auto& g : rep.gens) c += SpMat(g * g);
  return c / 32.0;
}

namespace {

struct StructureConstants {
  // brackets[p][q] = coordinates of [G_p, G_q] in the generator basis
  std::vector<std::vector<Vec>> brackets;
};

const StructureConstants& structure_constants(int n) {
  static std::mutex mu;
  static std::map<int, StructureConstants> cache;
  const std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const int np = pair_count(n);
  StructureConstants sc;
  std::vector<CliffordElement> g;
  for (int p = 0; p < np; ++p) {
    const auto [i, j] = pair_at(n, p);
    g.push_back(generator(i, j, n));
  }
  sc.brackets.assign(static_cast<std::size_t>(np), std::vector<Vec>(static_cast<std::size_t>(np)));
  for (int p = 0; p < np; ++p)
    for (int q = 0; q < np; ++q)
      sc.brackets[p][q] = generator_coordinates(commutator(g[p], g[q]));
  return cache.emplace(n, std::move(sc)).first->second;
}

}  // namespace

double bracket_closure_deviation(const GeneratorRep& rep) {
  const auto& sc = structure_constants(rep.n);
  const int np = pair_count(rep.n);
  double worst = 0.0;
  for (int p = 0; p < np; ++p)
    for (int q = p + 1; q < np; ++q) {
      const auto& gp = rep.gens[static_cast<std::size_t>(p)];
      const auto& gq = rep.gens[static_cast<std::size_t>(q)];
      SpMat lhs = SpMat(gp * gq) - SpMat(gq * gp);
      lhs -= rep_of(rep, sc.brackets[p][q]);
      worst = std::max(worst, max_abs(lhs));
    }
  return worst;
}

double unitarity_deviation(const GeneratorRep& rep) {
  double worst = 0.0;
  for (const auto& g : rep.gens) {
    SpMat s = SpMat(rep.inner * g) + SpMat(SpMat(g.adjoint()) * rep.inner);
    worst = std::max(worst, max_abs(s));
  }
  return worst;
}

SpMat rep_of(const GeneratorRep& rep, const Vec& coeffs) {
  SpMat out(rep.dim, rep.dim);
  for (Index p = 0; p < coeffs.size(); ++p)
    if (std::abs(coeffs(p)) > 1e-14) out += coeffs(p) * rep.gens[static_cast<std::size_t>(p)];
  return out;
}

namespace {

Rational round_half(double x, double tol, const char* what) {
  const double twice = std::round(2.0 * x);
  if (std::abs(2.0 * x - twice) > tol)
    throw NumericalError(std::string(what) + ": eigenvalue " + std::to_string(x) + " is not half-integral");
  return Rational(static_cast<long long>(twice), 2);
}

// Weights in (1/2)Z with |w_j| < 32 are separated by these coefficients.
std::vector<double> generic_coefficients(int m) {
  std::vector<double> c;
  double s = 1.0;
  for (int j = 0; j < m; ++j, s /= 64.0) c.push_back(s);
  return c;
}

}  // namespace

namespace {

// Splits span(block) into joint eigenspaces of cartan[j..], appending to out.
void split_weights(const std::vector<SpMat>& cartan, std::size_t j, const Mat& block, WeightVector prefix,
                   std::vector<WeightSpace>& out) {
  if (j == cartan.size()) {
    out.push_back({std::move(prefix), block});
    return;
  }
  // i * H_j is Hermitian with eigenvalue -4 nu_j on weight vectors
  Mat h = cplx(0.0, 1.0) * (block.adjoint() * (cartan[j] * block));
  h = (h + h.adjoint()).eval() / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  if (es.info() != Eigen::Success) throw NumericalError("Cartan eigensolve failed");
  const RealVec& vals = es.eigenvalues();
  Index start = 0;
  while (start < vals.size()) {
    const Rational nu = round_half(-vals(start) / 4.0, 1e-6, "cartan_weight_data");
    Index end = start + 1;
    while (end < vals.size() && round_half(-vals(end) / 4.0, 1e-6, "cartan_weight_data") == nu) ++end;
    WeightVector w = prefix;
    w.push_back(nu);
    split_weights(cartan, j + 1, block * es.eigenvectors().middleCols(start, end - start), std::move(w), out);
    start = end;
  }
}

}  // namespace

std::vector<WeightSpace> cartan_weight_data(const GeneratorRep& rep, double tol) {
  if (!rep.orthonormal) throw std::invalid_argument("cartan_weight_data expects an orthonormal representation");
  const int m = weight_rank(rep.n);
  std::vector<SpMat> cartan;
  for (int j = 1; j <= m; ++j) cartan.push_back(rep.gen(2 * j - 1, 2 * j));
  double scale = 1.0;
  for (const auto& h : cartan) scale = std::max(scale, max_abs(h));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const SpMat c = SpMat(cartan[a] * cartan[b]) - SpMat(cartan[b] * cartan[a]);
      if (max_abs(c) > std::max(tol, 1e-8) * scale * scale) throw NumericalError("Cartan generators do not commute");
    }

  // The joint eigenproblem decouples over connected components of the
  // combined sparsity pattern; solve each block on its own.
  std::vector<Index> parent(static_cast<std::size_t>(rep.dim));
  for (Index i = 0; i < rep.dim; ++i) parent[static_cast<std::size_t>(i)] = i;
  const auto root = [&](Index i) {
    while (parent[static_cast<std::size_t>(i)] != i)
      i = parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
    return i;
  };
  const double cut = 1e-13 * scale;
  for (const auto& h : cartan)
    for (Index k = 0; k < h.outerSize(); ++k)
      for (SpMat::InnerIterator it(h, k); it; ++it)
        if (std::abs(it.value()) > cut) parent[static_cast<std::size_t>(root(it.row()))] = root(it.col());
  std::map<Index, std::vector<Index>> blocks;
  for (Index i = 0; i < rep.dim; ++i) blocks[root(i)].push_back(i);

  std::map<WeightVector, std::vector<Mat>, std::function<bool(const WeightVector&, const WeightVector&)>> merged(
      [](const WeightVector& a, const WeightVector& b) { return lex_greater(a, b); });
  for (const auto& [r, idx] : blocks) {
    const Index s = static_cast<Index>(idx.size());
    std::vector<SpMat> local;
    for (const auto& h : cartan) {
      Mat d(s, s);
      for (Index a = 0; a < s; ++a)
        for (Index b = 0; b < s; ++b) d(a, b) = h.coeff(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]);
      local.push_back(to_sparse(d));
    }
    std::vector<WeightSpace> parts;
    split_weights(local, 0, Mat::Identity(s, s), {}, parts);
    for (auto& ws : parts) {
      Mat full = Mat::Zero(rep.dim, ws.basis.cols());
      for (Index a = 0; a < s; ++a) full.row(idx[static_cast<std::size_t>(a)]) = ws.basis.row(a);
      merged[ws.weight].push_back(std::move(full));
    }
  }
  std::vector<WeightSpace> out;
  for (auto& [w, mats] : merged) {
    Index cols = 0;
    for (const auto& mt : mats) cols += mt.cols();
    Mat basis(rep.dim, cols);
    Index at = 0;
    for (const auto& mt : mats) {
      basis.middleCols(at, mt.cols()) = mt;
      at += mt.cols();
    }
    out.push_back({w, std::move(basis)});
  }
  return out;
}

const std::vector<Root>& positive_roots(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Root>> cache;
  {
    const std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  require_n(n);
  const auto& sc = structure_constants(n);
  const int np = pair_count(n);
  const int m = weight_rank(n);
  std::vector<Mat> ad;
  for (int j = 1; j <= m; ++j) {
    const int h = pair_index(n, 2 * j - 1, 2 * j);
    Mat a(np, np);
    for (int q = 0; q < np; ++q) a.col(q) = sc.brackets[h][q];
    ad.push_back(a);
  }
  const auto coef = generic_coefficients(m);
  Mat combo = Mat::Zero(np, np);
  for (int j = 0; j < m; ++j) combo += coef[j] * ad[j];
  Eigen::ComplexEigenSolver<Mat> es(combo);
  std::vector<Root> roots;
  for (int k = 0; k < np; ++k) {
    Vec v = es.eigenvectors().col(k);
    v /= v.norm();
    WeightVector alpha;
    bool zero = true;
    for (int j = 0; j < m; ++j) {
      const cplx lam = v.dot(ad[j] * v);  // v^* ad_j v
      const double a = (lam / cplx(0.0, 4.0)).real();
      const Rational r = round_half(a, 1e-6, "positive_roots");
      if (r != Rational(0)) zero = false;
      alpha.push_back(r);
    }
    if (zero) continue;
    const auto first = std::find_if(alpha.begin(), alpha.end(), [](const Rational& r) { return r != Rational(0); });
    if (*first < Rational(0)) continue;
    roots.push_back({std::move(alpha), v});
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return lex_greater(a.root, b.root); });
  const std::size_t expected = static_cast<std::size_t>(n % 2 ? m * m : m * (m - 1));
  if (roots.size() != expected) throw NumericalError("positive root count mismatch");
  const std::lock_guard lock(mu);
  return cache.emplace(n, std::move(roots)).first->second;
}

namespace {

struct Ladder {
  std::vector<SpMat> raise, lower;
  std::vector<WeightVector> roots;
};

Ladder ladder_operators(const GeneratorRep& rep) {
  Ladder l;
  for (const auto& r : positive_roots(rep.n)) {
    SpMat e = rep_of(rep, r.coeffs);
    l.lower.push_back(SpMat(e.adjoint()));
    l.raise.push_back(std::move(e));
    l.roots.push_back(r.root);
  }
  return l;
}

WeightVector sub(const WeightVector& a, const WeightVector& b) {
  WeightVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Mat highest_weight_vectors(const Ladder& l, const Mat& weight_basis, double tol) {
  Index rows = 0;
  std::vector<Mat> blocks;
  for (const auto& e : l.raise) {
    blocks.push_back(e * weight_basis);
    rows += blocks.back().rows();
  }
  Mat stacked(rows, weight_basis.cols());
  Index r = 0;
  for (const auto& b : blocks) {
    stacked.middleRows(r, b.rows()) = b;
    r += b.rows();
  }
  return weight_basis * null_space(stacked, tol);
}

struct WeightLess {
  bool operator()(const WeightVector& a, const WeightVector& b) const { return lex_greater(a, b); }
};

// Span of U(n^-) applied to the given highest weight vectors.
Mat generate_module(const Ladder& l, const WeightVector& top, const Mat& hw, double tol) {
  std::map<WeightVector, Mat, WeightLess> parts;
  parts[top] = hw;
  std::deque<std::pair<WeightVector, Mat>> frontier{{top, hw}};
  while (!frontier.empty()) {
    auto [w, block] = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t a = 0; a < l.lower.size(); ++a) {
      const Mat cand = l.lower[a] * block;
      if (cand.cols() == 0 || max_abs(cand) < tol) continue;
      const WeightVector target = sub(w, l.roots[a]);
      auto& existing = parts[target];
      if (existing.rows() == 0) existing.resize(hw.rows(), 0);
      const Mat fresh = orthonormal_complement(existing, cand, tol);
      if (fresh.cols() == 0) continue;
      existing = hstack(existing, fresh);
      frontier.emplace_back(target, fresh);
    }
  }
  Mat out(hw.rows(), 0);
  for (const auto& [w, b] : parts) out = hstack(out, b);
  return out;
}

void require_orthonormal(const GeneratorRep& rep, const char* who) {
  if (!rep.orthonormal) throw std::invalid_argument(std::string(who) + " expects an orthonormal representation");
}

}  // namespace

std::vector<HighestWeight> highest_weights(const GeneratorRep& rep, double tol) {
  require_orthonormal(rep, "highest_weights");
  const auto spaces = cartan_weight_data(rep, tol);
  const auto l = ladder_operators(rep);
  std::vector<HighestWeight> out;
  long long total = 0;
  for (const auto& ws : spaces) {
    if (!is_dominant(rep.n, ws.weight)) continue;
    const Mat hw = highest_weight_vectors(l, ws.basis, tol);
    if (hw.cols() == 0) continue;
    DominantWeight w(rep.n, ws.weight);
    total += hw.cols() * weyl_dim(w);
    out.push_back({std::move(w), static_cast<int>(hw.cols())});
  }
  if (total != rep.dim)
    throw NumericalError("highest weights account for " + std::to_string(total) + " of " +
                         std::to_string(rep.dim) + " dimensions");
  return out;
}

std::vector<IsotypicComponent> isotypic_decomposition(const GeneratorRep& rep, double tol) {
  require_orthonormal(rep, "isotypic_decomposition");
  const auto spaces = cartan_weight_data(rep, tol);
  const auto l = ladder_operators(rep);
  std::vector<IsotypicComponent> out;
  Index total = 0;
  for (const auto& ws : spaces) {
    if (!is_dominant(rep.n, ws.weight)) continue;
    const Mat hw = highest_weight_vectors(l, ws.basis, tol);
    if (hw.cols() == 0) continue;
    DominantWeight w(rep.n, ws.weight);
    Mat basis = generate_module(l, ws.weight, hw, tol);
    const Index expected = hw.cols() * weyl_dim(w);
    if (basis.cols() != expected)
      throw NumericalError("component " + w.to_string() + " spans " + std::to_string(basis.cols()) +
                           " dimensions, expected " + std::to_string(expected));
    total += basis.cols();
    out.push_back({std::move(w), std::move(basis), static_cast<int>(hw.cols())});
  }
  if (total != rep.dim)
    throw NumericalError("isotypic components leave a residual of " + std::to_string(rep.dim - total) +
                         " dimensions");
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b)
      if (max_abs(Mat(out[a].basis.adjoint() * out[b].basis)) > 1e-8)
        throw NumericalError("isotypic components are not mutually orthogonal");
  return out;
}

Mat component_basis(const GeneratorRep& rep, const DominantWeight& weight, double tol) {
  require_orthonormal(rep, "component_basis");
  const auto spaces = cartan_weight_data(rep, tol);
  const auto it = std::find_if(spaces.begin(), spaces.end(),
                               [&](const WeightSpace& ws) { return ws.weight == weight.entries(); });
  if (it == spaces.end()) return Mat(rep.dim, 0);
  const auto l = ladder_operators(rep);
  const Mat hw = highest_weight_vectors(l, it->basis, tol);
  if (hw.cols() == 0) return Mat(rep.dim, 0);
  return generate_module(l, weight.entries(), hw, tol);
}

namespace {

GeneratorRep extract(const GeneratorRep& rep, const DominantWeight& w, double tol) {
  const Mat basis = component_basis(rep, w, tol);
  if (basis.cols() != weyl_dim(w))
    throw NumericalError("could not isolate a single copy of " + w.to_string());
  auto r = restrict_rep(rep, basis);
  r.label = w;
  return r;
}

}  // namespace

GeneratorRep irrep(const DominantWeight& weight, double tol) {
  const int n = weight.n();
  const int m = weight.rank();
  if (weight.is_zero()) return trivial_rep(n);
  if (weight == spinor_weight(n) && n % 2 == 1) return spinor_rep(n);
  for (int p = 1; p <= m; ++p)
    if (weight == form_weight(n, p) && (n % 2 == 1 || p < m)) return exterior_rep(n, p);
  if (weight[0].denominator() == 1 && weight == harmonic_weight(n, static_cast<int>(weight[0].numerator())))
    return harmonic_subspace(n, static_cast<int>(weight[0].numerator()), tol).rep;

  if (weight.half_integral() && n % 2 == 0)
    throw std::invalid_argument("half-spin representations for even n are not supported");

  // Top component of a tensor product of fundamental pieces.
  std::vector<DominantWeight> pieces;
  WeightVector rest = weight.entries();
  if (weight.half_integral()) {
    pieces.push_back(spinor_weight(n));
    for (auto& x : rest) x -= Rational(1, 2);
  }
  if (n % 2 == 0 && m >= 2) {
    const Rational last = rest[m - 1];
    WeightVector piece(static_cast<std::size_t>(m), 1);
    if (last < Rational(0)) piece[m - 1] = -1;
    const long long copies = abs(last).numerator();
    for (long long c = 0; c < copies; ++c) pieces.emplace_back(n, piece);
    for (int i = 0; i < m; ++i) rest[i] -= abs(last);
    rest[m - 1] = 0;
  }
  for (int p = 1; p <= m; ++p) {
    const Rational next = p < m ? rest[p] : Rational(0);
    const long long copies = (rest[p - 1] - next).numerator();
    for (long long c = 0; c < copies; ++c) pieces.push_back(form_weight(n, p));
  }

  auto build_piece = [&](const DominantWeight& w) {
    if (w == spinor_weight(n)) return spinor_rep(n);
    for (int p = 1; p < m || (n % 2 == 1 && p == m); ++p)
      if (w == form_weight(n, p)) return exterior_rep(n, p);
    return extract(exterior_rep(n, m), w, tol);
  };

  GeneratorRep cur = build_piece(pieces.front());
  WeightVector acc = pieces.front().entries();
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    acc = add(acc, pieces[i].entries());
    cur = extract(tensor_rep(cur, build_piece(pieces[i])), DominantWeight(n, acc), tol);
  }
  cur.label = weight;
  return cur;
}

}  // namespace spinh
