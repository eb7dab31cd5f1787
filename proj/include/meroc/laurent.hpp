#pragma once

#include <complex>
#include <map>

#include "meroc/qseries.hpp"
#include "meroc/rational.hpp"

namespace meroc {

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  using Scalar = Rational;
  static Rational zero() { return Rational(0); }
  static bool is_zero(const Rational& c) { return c.is_zero(); }
  static Rational mul_rational(const Rational& c, const Rational& r) { return c * r; }
  static Rational mul_scalar(const Rational& c, const Scalar& s) { return c * s; }
  static Scalar scalar_pow(const Scalar& s, long e) { return s.pow(e); }
  static bool scalar_invertible(const Scalar& s) { return !s.is_zero(); }
  static bool scalar_is_zero(const Scalar& s) { return s.is_zero(); }
};

template <>
struct CoeffTraits<QSeries> {
  using Scalar = Rational;
  static QSeries zero() { return QSeries(); }
  static bool is_zero(const QSeries& c) { return c.is_exact_zero(); }
  static QSeries mul_rational(const QSeries& c, const Rational& r) { return c * r; }
  static QSeries mul_scalar(const QSeries& c, const Scalar& s) { return c * s; }
  static Scalar scalar_pow(const Scalar& s, long e) { return s.pow(e); }
  static bool scalar_invertible(const Scalar& s) { return !s.is_zero(); }
  static bool scalar_is_zero(const Scalar& s) { return s.is_zero(); }
};

template <>
struct CoeffTraits<std::complex<double>> {
  using Scalar = std::complex<double>;
  static std::complex<double> zero() { return {0.0, 0.0}; }
  static bool is_zero(const std::complex<double>& c) { return c == zero(); }
  static std::complex<double> mul_rational(const std::complex<double>& c,
                                           const Rational& r) {
    return c * r.to_double();
  }
  static std::complex<double> mul_scalar(const std::complex<double>& c,
                                         const Scalar& s) {
    return c * s;
  }
  static Scalar scalar_pow(const Scalar& s, long e) {
    return std::pow(s, static_cast<double>(e));
  }
  static bool scalar_invertible(const Scalar& s) { return s != zero(); }
  static bool scalar_is_zero(const Scalar& s) { return s == zero(); }
};

// Truncated Laurent series in one formal variable.  Coefficients may be
// Rational, QSeries (series whose coefficients are themselves q-series) or
// complex doubles for numeric work.
//
// Absent coefficients are exactly zero; coefficients that are only zero up
// to their own truncation stay stored.  lowest_order() is a lower bound on
// occurring exponents, truncation_order() the exclusive upper bound of
// knowledge.
template <class C>
class LaurentSeries {
 public:
  using Traits = CoeffTraits<C>;
  using Scalar = typename Traits::Scalar;

  LaurentSeries() : low_(0), trunc_(kExactOrder) {}

  static LaurentSeries zero(int lowest, int order) {
    LaurentSeries s;
    s.low_ = lowest;
    s.trunc_ = order;
    return s;
  }

  static LaurentSeries monomial(int n, const C& c, int order = kExactOrder) {
    LaurentSeries s;
    s.low_ = std::min(n, 0);
    s.trunc_ = order;
    if (!Traits::is_zero(c) && n < order) s.c_[n] = c;
    if (!s.c_.empty()) s.low_ = std::min(s.low_, n);
    return s;
  }

  int lowest_order() const { return low_; }
  int truncation_order() const { return trunc_; }

  // Lowest exponent whose coefficient is not known to vanish identically.
  int order() const { return c_.empty() ? trunc_ : c_.begin()->first; }

  const std::map<int, C>& coefficients() const { return c_; }

  C coeff(int n) const {
    if (n >= trunc_)
      throw TruncationError("Laurent coefficient beyond truncation order");
    auto it = c_.find(n);
    return it == c_.end() ? Traits::zero() : it->second;
  }

  void set_coeff(int n, const C& c) {
    if (n >= trunc_)
      throw TruncationError("setting Laurent coefficient beyond truncation");
    if (Traits::is_zero(c))
      c_.erase(n);
    else {
      c_[n] = c;
      low_ = std::min(low_, n);
    }
  }

  LaurentSeries truncate(int order) const {
    LaurentSeries r;
    r.low_ = low_;
    r.trunc_ = std::min(trunc_, order);
    for (const auto& [n, c] : c_)
      if (n < r.trunc_) r.c_[n] = c;
    return r;
  }

  LaurentSeries operator-() const {
    LaurentSeries r;
    r.low_ = low_;
    r.trunc_ = trunc_;
    for (const auto& [n, c] : c_) r.c_[n] = Traits::mul_rational(c, Rational(-1));
    return r;
  }

  LaurentSeries operator+(const LaurentSeries& o) const {
    LaurentSeries r;
    r.low_ = std::min(low_, o.low_);
    r.trunc_ = std::min(trunc_, o.trunc_);
    for (const auto& [n, c] : c_)
      if (n < r.trunc_) r.c_[n] = c;
    for (const auto& [n, c] : o.c_) {
      if (n >= r.trunc_) continue;
      auto it = r.c_.find(n);
      if (it == r.c_.end()) {
        r.c_[n] = c;
      } else {
        it->second = it->second + c;
        if (Traits::is_zero(it->second)) r.c_.erase(it);
      }
    }
    return r;
  }

  LaurentSeries operator-(const LaurentSeries& o) const { return *this + (-o); }

  LaurentSeries operator*(const LaurentSeries& o) const {
    LaurentSeries r;
    r.low_ = low_ + o.low_;
    r.trunc_ = std::min(sat_add_order(trunc_, o.order()),
                        sat_add_order(o.trunc_, order()));
    for (const auto& [n, a] : c_) {
      for (const auto& [m, b] : o.c_) {
        long e = static_cast<long>(n) + m;
        if (e >= r.trunc_) break;
        C prod = a * b;
        if (Traits::is_zero(prod)) continue;
        auto it = r.c_.find(static_cast<int>(e));
        if (it == r.c_.end()) {
          r.c_[static_cast<int>(e)] = prod;
        } else {
          it->second = it->second + prod;
          if (Traits::is_zero(it->second)) r.c_.erase(it);
        }
      }
    }
    return r;
  }

  LaurentSeries scale_coeffs(const Rational& s) const {
    LaurentSeries r;
    r.low_ = low_;
    r.trunc_ = trunc_;
    if (s.is_zero()) return r;
    for (const auto& [n, c] : c_) r.c_[n] = Traits::mul_rational(c, s);
    return r;
  }

  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

  bool operator==(const LaurentSeries& o) const {
    return trunc_ == o.trunc_ && low_ == o.low_ && c_ == o.c_;
  }
  bool operator!=(const LaurentSeries& o) const { return !(*this == o); }

  // Termwise d/dz; the truncation order drops by one.
  LaurentSeries derivative() const {
    LaurentSeries r;
    r.low_ = low_ == 0 ? 0 : low_ - 1;
    r.trunc_ = trunc_ == kExactOrder ? kExactOrder : trunc_ - 1;
    for (const auto& [n, c] : c_) {
      if (n == 0) continue;
      if (n - 1 >= r.trunc_) continue;
      C d = Traits::mul_rational(c, Rational(n));
      if (!Traits::is_zero(d)) r.c_[n - 1] = d;
    }
    return r;
  }

  // Taylor re-expansion s(z + c) around 0, truncated at the same order.
  // Exact for Laurent polynomials with no pole; a pole term needs an
  // invertible shift and a finite truncation order.
  LaurentSeries shift(const Scalar& c) const {
    if (Traits::scalar_is_zero(c)) return *this;
    bool has_pole = !c_.empty() && c_.begin()->first < 0;
    if (has_pole && trunc_ == kExactOrder)
      throw TruncationError(
          "shift of a series with poles needs a finite truncation order");
    LaurentSeries r;
    r.low_ = 0;  // re-expansion around 0 is a Taylor series
    r.trunc_ = trunc_;
    for (const auto& [n, a] : c_) {
      if (n >= 0) {
        for (int j = 0; j <= n; ++j) {
          if (j >= r.trunc_) break;
          add_term(r, j, Traits::mul_scalar(
                             Traits::mul_rational(a, binomial(n, j)),
                             Traits::scalar_pow(c, n - j)));
        }
      } else {
        if (!Traits::scalar_invertible(c))
          throw DomainError("pole at shifted origin: shift constant is not invertible");
        for (int j = 0; j < r.trunc_; ++j) {
          add_term(r, j, Traits::mul_scalar(
                             Traits::mul_rational(a, binomial(n, j)),
                             Traits::scalar_pow(c, n - j)));
        }
      }
    }
    return r;
  }

  // lambda^weight * s(lambda z): the two-sided scaling of the K_G
  // covariance law.
  LaurentSeries scale(const Scalar& lambda, long weight) const {
    if (Traits::scalar_is_zero(lambda))
      throw DomainError("scale requires an invertible lambda");
    LaurentSeries r;
    r.low_ = low_;
    r.trunc_ = trunc_;
    for (const auto& [n, a] : c_)
      r.c_[n] = Traits::mul_scalar(a, Traits::scalar_pow(lambda, weight + n));
    return r;
  }

 private:
  static void add_term(LaurentSeries& r, int n, C v) {
    if (Traits::is_zero(v)) return;
    auto it = r.c_.find(n);
    if (it == r.c_.end()) {
      r.c_[n] = std::move(v);
    } else {
      it->second = it->second + v;
      if (Traits::is_zero(it->second)) r.c_.erase(it);
    }
  }

  std::map<int, C> c_;
  int low_;
  int trunc_;
};

}  // namespace meroc
