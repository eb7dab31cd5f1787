#pragma once

#include <array>
#include <complex>
#include <map>
#include <vector>

#include "meroc/qseries.hpp"

namespace meroc {

// Bernoulli number B_k in the convention
//   t/(e^t - 1) - 1 + t/2 = sum_{k >= 2} B_k t^k / k!,
// i.e. the standard sequence with B_1 = -1/2.
Rational bernoulli(int k);

// Divisor power sum sigma_{p}(n) = sum_{d | n} d^p.
mpz_class sigma(int p, long n);

// Eisenstein series q-expansion to exclusive order N:
//   E_k = -B_k/k! + (2/(k-1)!) sum_{n >= 1} sigma_{k-1}(n) q^n       (k even)
// Odd k >= 3 yields the zero series (exactly, not merely truncated).
// k < 2 is a domain error.
QSeries eisenstein_q(int k, int order);

struct EisensteinValue {
  std::complex<double> value;
  double tail_bound;  // bound on the dropped |sum_{n >= N} ...| tail
};

// Numeric value of E_k(tau) through q-order N with q = exp(2 pi i tau);
// requires Im(tau) > 0.
EisensteinValue eisenstein_eval(int k, std::complex<double> tau, int order);

// Element of the weighted polynomial ring Q[E2, E4, E6]; a monomial
// E2^a E4^b E6^c carries weight 2a + 4b + 6c.
class QuasimodularElement {
 public:
  using Key = std::array<int, 3>;

  QuasimodularElement() = default;

  static QuasimodularElement constant(const Rational& c) {
    QuasimodularElement e;
    if (!c.is_zero()) e.terms_[{0, 0, 0}] = c;
    return e;
  }
  static QuasimodularElement generator(int which);  // 0 -> E2, 1 -> E4, 2 -> E6

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, const Rational& c);

  QuasimodularElement operator-() const;
  QuasimodularElement operator+(const QuasimodularElement& o) const;
  QuasimodularElement operator-(const QuasimodularElement& o) const;
  QuasimodularElement operator*(const QuasimodularElement& o) const;
  QuasimodularElement operator*(const Rational& s) const;
  bool operator==(const QuasimodularElement& o) const { return terms_ == o.terms_; }

  static int weight_of(const Key& k) { return 2 * k[0] + 4 * k[1] + 6 * k[2]; }

  // Sorted distinct weights present.
  std::vector<int> weights() const;
  bool is_weight_homogeneous(int* weight = nullptr) const;

  // q-expansion by substituting the Eisenstein expansions.
  QSeries expand(int order) const;

 private:
  std::map<Key, Rational> terms_;
};

}  // namespace meroc
