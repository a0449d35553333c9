#include <algorithm>
#include <random>

#include "doctest.h"
#include "spinh/clifford.hpp"

using namespace spinh;

namespace {

// Reference blade product: concatenate index lists, bubble sort counting
// transpositions, then cancel adjacent equal pairs with e_i e_i = -1.
std::pair<int, std::vector<int>> naive_blade_product(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  int sign = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j + 1 < a.size() - i; ++j)
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        sign = -sign;
      }
  std::vector<int> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i + 1 < a.size() && a[i] == a[i + 1]) {
      sign = -sign;
      ++i;
    } else {
      out.push_back(a[i]);
    }
  }
  return {sign, out};
}

std::vector<int> indices_of(Blade b) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (b & (Blade{1} << i)) out.push_back(i + 1);
  return out;
}

CliffordElement random_element(int n, std::mt19937& rng) {
  std::normal_distribution<double> d;
  CliffordElement x(n);
  for (Blade b = 0; b < (Blade{1} << n); ++b)
    if (rng() % 3 == 0) x += CliffordElement::blade(n, indices_of(b), cplx(d(rng), d(rng)));
  return x;
}

}  // namespace

TEST_CASE("generator relations") {
  const int n = 4;
  const auto e1 = CliffordElement::basis_vector(n, 1);
  const auto e2 = CliffordElement::basis_vector(n, 2);
  CHECK(e1 * e1 == CliffordElement::scalar(n, -1.0));
  CHECK((e1 * e2).coeff({1, 2}) == cplx(1.0));
  const auto b12 = CliffordElement::blade(n, {1, 2});
  CHECK(b12 * b12 == CliffordElement::scalar(n, -1.0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const auto ei = CliffordElement::basis_vector(n, i);
      const auto ej = CliffordElement::basis_vector(n, j);
      const auto anti = ei * ej + ej * ei;
      CHECK(anti == CliffordElement::scalar(n, i == j ? -2.0 : 0.0));
    }
}

TEST_CASE("blade sign agrees with naive reordering") {
  const int n = 6;
  for (Blade a = 0; a < (Blade{1} << n); ++a)
    for (Blade b = 0; b < (Blade{1} << n); ++b) {
      const auto [sign, idx] = naive_blade_product(indices_of(a), indices_of(b));
      CHECK(blade_sign(a, b) == sign);
      CHECK(indices_of(a ^ b) == idx);
    }
}

TEST_CASE("product is associative on random elements") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_element(5, rng);
    const auto b = random_element(5, rng);
    const auto c = random_element(5, rng);
    CHECK(((a * b) * c).approx_equal(a * (b * c), 1e-12));
  }
}

TEST_CASE("generator and adjoint bracket") {
  CHECK(generator(1, 2, 3) == CliffordElement::blade(3, {1, 2}, 2.0));
  CHECK_THROWS_AS(generator(1, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(generator(0, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(generator(2, 4, 3), std::invalid_argument);
  const auto e1 = CliffordElement::basis_vector(3, 1);
  const auto e2 = CliffordElement::basis_vector(3, 2);
  CHECK(commutator(generator(1, 2, 3), e2) == cplx(-4.0) * e1);

  const int n = 5;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        CliffordElement expect(n);
        if (k == i) expect += cplx(4.0) * CliffordElement::basis_vector(n, j);
        if (k == j) expect -= cplx(4.0) * CliffordElement::basis_vector(n, i);
        CHECK(commutator(generator(i, j, n), CliffordElement::basis_vector(n, k)) == expect);
      }
}

TEST_CASE("Jacobi identity on generators") {
  const int n = 4;
  for (int a = 0; a < pair_count(n); ++a)
    for (int b = 0; b < pair_count(n); ++b)
      for (int c = 0; c < pair_count(n); ++c) {
        const auto [i1, j1] = pair_at(n, a);
        const auto [i2, j2] = pair_at(n, b);
        const auto [i3, j3] = pair_at(n, c);
        const auto x = generator(i1, j1, n), y = generator(i2, j2, n), z = generator(i3, j3, n);
        const auto s = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) +
                       commutator(z, commutator(x, y));
        CHECK(s.approx_equal(CliffordElement(n), 0.0));
      }
}

TEST_CASE("pair indexing round trips") {
  for (int n : {3, 4, 7}) {
    CHECK(pair_count(n) == n * (n - 1) / 2);
    for (int k = 0; k < pair_count(n); ++k) {
      const auto [i, j] = pair_at(n, k);
      CHECK(i < j);
      CHECK(pair_index(n, i, j) == k);
    }
  }
}

TEST_CASE("exponential of a generator is a rotor") {
  const int n = 3;
  const double t = 0.7;
  const auto g = exp(cplx(t) * generator(1, 2, n));
  // exp(2t e1e2) = cos 2t + sin 2t e1e2
  CHECK(std::abs(g.coeff(std::vector<int>{}) - cplx(std::cos(2 * t))) < 1e-12);
  CHECK(std::abs(g.coeff({1, 2}) - cplx(std::sin(2 * t))) < 1e-12);
  const auto ginv = exp(cplx(-t) * generator(1, 2, n));
  CHECK((g * ginv).approx_equal(CliffordElement::scalar(n, 1.0), 1e-12));
}

TEST_CASE("generator coordinates") {
  const int n = 4;
  const auto x = cplx(2.0) * generator(1, 3, n) - generator(2, 4, n);
  const Vec c = generator_coordinates(x);
  CHECK(std::abs(c(pair_index(n, 1, 3)) - cplx(2.0)) < 1e-14);
  CHECK(std::abs(c(pair_index(n, 2, 4)) - cplx(-1.0)) < 1e-14);
  CHECK_THROWS(generator_coordinates(CliffordElement::basis_vector(n, 1)));
}
