#include "meroc/quasimodular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <set>

namespace meroc {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Rational bernoulli(int k) {
  if (k < 0) throw DomainError("Bernoulli index must be non-negative");
  static std::vector<Rational> cache{Rational(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  // sum_{j=0}^{m} binom(m+1, j) B_j = 0 for m >= 1.
  while (static_cast<int>(cache.size()) <= k) {
    int m = static_cast<int>(cache.size());
    Rational s(0);
    for (int j = 0; j < m; ++j) s += binomial(m + 1, j) * cache[j];
    cache.push_back(-s / binomial(m + 1, m));
  }
  return cache[k];
}

mpz_class sigma(int p, long n) {
  if (n <= 0) throw DomainError("divisor sum needs n >= 1");
  mpz_class acc(0);
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(p));
    acc += t;
  }
  return acc;
}

QSeries eisenstein_q(int k, int order) {
  if (k < 2) throw DomainError("Eisenstein index must satisfy k >= 2");
  if (order < 1) throw DomainError("truncation order must be >= 1");
  // Odd E_k vanish identically; return the exact zero series so downstream
  // products keep full truncation information.
  if (k % 2 != 0) return QSeries();
  QSeries s = QSeries::zero(order);
  s.set_coeff(0, -bernoulli(k) / Rational(factorial(k)));
  Rational pre = Rational(2) / Rational(factorial(k - 1));
  for (int n = 1; n < order; ++n)
    s.set_coeff(n, pre * Rational(sigma(k - 1, n)));
  return s;
}

EisensteinValue eisenstein_eval(int k, std::complex<double> tau, int order) {
  if (tau.imag() <= 0.0)
    throw DomainError("Eisenstein evaluation requires Im(tau) > 0");
  QSeries s = eisenstein_q(k, order);
  std::complex<double> q = std::exp(std::complex<double>(0.0, 2.0 * kPi) * tau);
  EisensteinValue out;
  out.value = s.eval(q);
  if (s.known_part_is_zero()) {
    out.tail_bound = 0.0;  // odd k: exactly zero
    return out;
  }
  // sigma_{k-1}(n) <= n^k, so the dropped tail is below
  // (2/(k-1)!) sum_{n >= N} n^k |q|^n; bound it by the geometric tail with
  // ratio r = |q| ((N+1)/N)^k once r < 1.
  double x = std::abs(q);
  double N = static_cast<double>(order);
  double ratio = x * std::pow((N + 1.0) / N, k);
  double first = 2.0 / factorial(k - 1).get_d() * std::pow(N, k) * std::pow(x, N);
  out.tail_bound = ratio < 1.0 ? first / (1.0 - ratio)
                               : std::numeric_limits<double>::infinity();
  return out;
}

QuasimodularElement QuasimodularElement::generator(int which) {
  if (which < 0 || which > 2)
    throw ValidationError("generator index must be 0, 1 or 2");
  Key k{0, 0, 0};
  k[which] = 1;
  QuasimodularElement e;
  e.terms_[k] = Rational(1);
  return e;
}

void QuasimodularElement::add_term(const Key& k, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_[k] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QuasimodularElement QuasimodularElement::operator-() const {
  QuasimodularElement r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

QuasimodularElement QuasimodularElement::operator+(const QuasimodularElement& o) const {
  QuasimodularElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

QuasimodularElement QuasimodularElement::operator-(const QuasimodularElement& o) const {
  return *this + (-o);
}

QuasimodularElement QuasimodularElement::operator*(const QuasimodularElement& o) const {
  QuasimodularElement r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      r.add_term({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
  return r;
}

QuasimodularElement QuasimodularElement::operator*(const Rational& s) const {
  QuasimodularElement r;
  if (s.is_zero()) return r;
  for (const auto& [k, c] : terms_) r.terms_[k] = c * s;
  return r;
}

std::vector<int> QuasimodularElement::weights() const {
  std::set<int> w;
  for (const auto& [k, c] : terms_) w.insert(weight_of(k));
  return {w.begin(), w.end()};
}

bool QuasimodularElement::is_weight_homogeneous(int* weight) const {
  std::vector<int> w = weights();
  if (w.size() > 1) return false;
  if (weight) *weight = w.empty() ? 0 : w.front();
  return true;
}

QSeries QuasimodularElement::expand(int order) const {
  QSeries e2 = eisenstein_q(2, order);
  QSeries e4 = eisenstein_q(4, order);
  QSeries e6 = eisenstein_q(6, order);
  QSeries acc = QSeries::zero(order);
  for (const auto& [k, c] : terms_) {
    QSeries t = QSeries(c).truncate(order);
    for (int i = 0; i < k[0]; ++i) t *= e2;
    for (int i = 0; i < k[1]; ++i) t *= e4;
    for (int i = 0; i < k[2]; ++i) t *= e6;
    acc += t;
  }
  return acc;
}

}  // namespace meroc
