#include <doctest.h>

#include <random>

#include "meroc/linalg.hpp"
#include "meroc/quasimodular.hpp"

using namespace meroc;

namespace {

// Independent generating-function oracle: invert (e^t - 1)/t as a power
// series; coefficient k of the inverse is B_k / k!.
std::vector<Rational> bernoulli_over_factorial_oracle(int order) {
  // a_j = 1/(j+1)!  for (e^t-1)/t
  std::vector<Rational> a(order), inv(order);
  for (int j = 0; j < order; ++j) a[j] = Rational(1) / Rational(factorial(j + 1));
  inv[0] = Rational(1);
  for (int n = 1; n < order; ++n) {
    Rational s(0);
    for (int j = 1; j <= n; ++j) s += a[j] * inv[n - j];
    inv[n] = -s;
  }
  return inv;
}

// Brute-force divisor sum.
long sigma_oracle(int p, long n) {
  long acc = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) {
      long t = 1;
      for (int i = 0; i < p; ++i) t *= d;
      acc += t;
    }
  return acc;
}

long gcd_long(long a, long b) { return b == 0 ? a : gcd_long(b, a % b); }

}  // namespace

TEST_CASE("bernoulli numbers match the displayed expansion") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == Rational(0));
  CHECK(bernoulli(4) == Rational(-1, 30));
  // Displayed coefficients of the generating function: 1/12, -1/720, 1/30240.
  CHECK(bernoulli(2) / Rational(factorial(2)) == Rational(1, 12));
  CHECK(bernoulli(4) / Rational(factorial(4)) == Rational(-1, 720));
  CHECK(bernoulli(6) / Rational(factorial(6)) == Rational(1, 30240));
}

TEST_CASE("bernoulli against the series-inversion oracle") {
  auto oracle = bernoulli_over_factorial_oracle(16);
  for (int k = 0; k < 16; ++k)
    CHECK(bernoulli(k) / Rational(factorial(k)) == oracle[k]);
}

TEST_CASE("sigma multiplicativity spot-check") {
  for (long m = 1; m <= 30; ++m)
    for (long n = 1; n <= 30; ++n) {
      if (gcd_long(m, n) != 1) continue;
      CHECK(sigma(3, m * n) == sigma(3, m) * sigma(3, n));
    }
  CHECK(sigma(1, 1) == 1);
  CHECK(sigma(1, 2) == 3);
  CHECK(sigma(1, 6) == 12);
}

TEST_CASE("eisenstein q-expansion basics") {
  QSeries e2 = eisenstein_q(2, 5);
  CHECK(e2.coeff(0) == -bernoulli(2) / Rational(factorial(2)));
  CHECK(e2.coeff(0) == Rational(-1, 12));
  CHECK(e2.coeff(1) == Rational(2));
  CHECK(e2.coeff(2) == Rational(6));
  for (int n = 1; n < 5; ++n)
    CHECK(e2.coeff(n) == Rational(2 * sigma_oracle(1, n)));

  QSeries e3 = eisenstein_q(3, 5);
  CHECK(e3.is_exact_zero());

  CHECK_THROWS_AS(eisenstein_q(1, 5), DomainError);
  CHECK_THROWS_AS(eisenstein_q(0, 5), DomainError);
}

TEST_CASE("eisenstein constant terms for even k up to 12") {
  for (int k = 2; k <= 12; k += 2) {
    QSeries e = eisenstein_q(k, 50);
    CHECK(e.coeff(0) == -bernoulli(k) / Rational(factorial(k)));
    for (int n = 1; n < 10; ++n) {
      Rational want = Rational(2) / Rational(factorial(k - 1)) *
                      Rational(sigma(k - 1, n));
      CHECK(e.coeff(n) == want);
    }
  }
}

TEST_CASE("numeric eisenstein evaluation") {
  std::complex<double> tau_i(0.0, 1.0);
  EisensteinValue a = eisenstein_eval(2, tau_i, 40);
  EisensteinValue b = eisenstein_eval(2, tau_i, 60);
  CHECK(std::abs(a.value - b.value) < 1e-12);
  CHECK(a.tail_bound < 1e-12);

  // Periodicity of q under tau -> tau + 1.
  EisensteinValue c = eisenstein_eval(4, std::complex<double>(1.0, 1.0), 40);
  EisensteinValue d = eisenstein_eval(4, tau_i, 40);
  CHECK(std::abs(c.value - d.value) < 1e-13);

  EisensteinValue e = eisenstein_eval(5, tau_i, 40);
  CHECK(e.value == std::complex<double>(0.0, 0.0));

  CHECK_THROWS_AS(eisenstein_eval(2, std::complex<double>(0.5, 0.0), 10),
                  DomainError);
  CHECK_THROWS_AS(eisenstein_eval(2, std::complex<double>(0.5, -1.0), 10),
                  DomainError);
}

TEST_CASE("quasimodular elements: weight grading") {
  QuasimodularElement e2 = QuasimodularElement::generator(0);
  QuasimodularElement e4 = QuasimodularElement::generator(1);
  QuasimodularElement e6 = QuasimodularElement::generator(2);

  QuasimodularElement w8 = e2 * e6 + e4 * e4;
  int w = 0;
  CHECK(w8.is_weight_homogeneous(&w));
  CHECK(w == 8);
  CHECK(!(e2 + e4).is_weight_homogeneous());

  std::mt19937 rng(47);
  std::uniform_int_distribution<int> exp(0, 3);
  for (int i = 0; i < 50; ++i) {
    QuasimodularElement x;
    x.add_term({exp(rng), exp(rng), exp(rng)}, Rational(1, 3));
    QuasimodularElement y;
    y.add_term({exp(rng), exp(rng), exp(rng)}, Rational(2));
    int wx = 0, wy = 0, wxy = 0;
    CHECK(x.is_weight_homogeneous(&wx));
    CHECK(y.is_weight_homogeneous(&wy));
    QuasimodularElement xy = x * y;
    CHECK(xy.is_weight_homogeneous(&wxy));
    CHECK(wxy == wx + wy);
  }
}

TEST_CASE("no low-weight linear relations among monomial q-expansions") {
  // For each weight w <= 12 the distinct monomials E2^a E4^b E6^c of weight
  // w have linearly independent q-expansions.
  for (int w = 2; w <= 12; w += 2) {
    std::vector<QSeries> expansions;
    for (int a = 0; 2 * a <= w; ++a)
      for (int b = 0; 2 * a + 4 * b <= w; ++b)
        for (int c = 0; 2 * a + 4 * b + 6 * c <= w; ++c) {
          if (2 * a + 4 * b + 6 * c != w) continue;
          QuasimodularElement m;
          m.add_term({a, b, c}, Rational(1));
          expansions.push_back(m.expand(30));
        }
    MatQ mat = MatQ::Constant(30, expansions.size(), Rational(0));
    for (size_t j = 0; j < expansions.size(); ++j)
      for (int n = 0; n < 30; ++n) mat(n, j) = expansions[j].coeff(n);
    CHECK(rank_exact(mat) == static_cast<long>(expansions.size()));
  }
}
