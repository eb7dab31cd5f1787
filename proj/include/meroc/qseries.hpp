#pragma once

#include <complex>
#include <limits>
#include <map>
#include <string>

#include "meroc/rational.hpp"

namespace meroc {

// Truncation orders are "exclusive upper bounds of knowledge": coefficients
// at exponent >= order are unknown, not zero.  kExactOrder marks a series
// known everywhere (a polynomial).
inline constexpr int kExactOrder = std::numeric_limits<int>::max();

inline int sat_add_order(int a, int b) {
  if (a == kExactOrder || b == kExactOrder) return kExactOrder;
  long s = static_cast<long>(a) + static_cast<long>(b);
  if (s >= kExactOrder) return kExactOrder;
  return static_cast<int>(s);
}

// Truncated power series in q with exact rational coefficients.
// Invariant: every stored exponent n satisfies 0 <= n < truncation_order().
class QSeries {
 public:
  QSeries() : trunc_(kExactOrder) {}
  explicit QSeries(const Rational& c) : trunc_(kExactOrder) {
    if (!c.is_zero()) c_[0] = c;
  }
  QSeries(long c) : QSeries(Rational(c)) {}  // NOLINT: scalar literals

  static QSeries zero(int order) {
    QSeries s;
    s.trunc_ = order;
    return s;
  }

  static QSeries monomial(int n, const Rational& c, int order = kExactOrder) {
    if (n < 0) throw DomainError("QSeries exponent must be non-negative");
    QSeries s;
    s.trunc_ = order;
    if (!c.is_zero() && n < order) s.c_[n] = c;
    return s;
  }

  int truncation_order() const { return trunc_; }

  // Lowest exponent with a nonzero coefficient; truncation_order() when the
  // known part vanishes identically.
  int order() const { return c_.empty() ? trunc_ : c_.begin()->first; }

  bool known_part_is_zero() const { return c_.empty(); }
  bool is_exact_zero() const { return c_.empty() && trunc_ == kExactOrder; }

  const std::map<int, Rational>& coefficients() const { return c_; }

  Rational coeff(int n) const {
    if (n >= trunc_)
      throw TruncationError("coefficient q^" + std::to_string(n) +
                            " beyond truncation order " + std::to_string(trunc_));
    auto it = c_.find(n);
    return it == c_.end() ? Rational(0) : it->second;
  }

  void set_coeff(int n, const Rational& c) {
    if (n < 0) throw DomainError("QSeries exponent must be non-negative");
    if (n >= trunc_)
      throw TruncationError("setting coefficient beyond truncation order");
    if (c.is_zero())
      c_.erase(n);
    else
      c_[n] = c;
  }

  QSeries truncate(int order) const {
    QSeries r;
    r.trunc_ = std::min(trunc_, order);
    for (const auto& [n, c] : c_)
      if (n < r.trunc_) r.c_[n] = c;
    return r;
  }

  QSeries operator-() const {
    QSeries r;
    r.trunc_ = trunc_;
    for (const auto& [n, c] : c_) r.c_[n] = -c;
    return r;
  }

  QSeries operator+(const QSeries& o) const {
    QSeries r;
    r.trunc_ = std::min(trunc_, o.trunc_);
    for (const auto& [n, c] : c_)
      if (n < r.trunc_) r.c_[n] = c;
    for (const auto& [n, c] : o.c_) {
      if (n >= r.trunc_) continue;
      Rational s = (r.c_.count(n) ? r.c_[n] : Rational(0)) + c;
      if (s.is_zero())
        r.c_.erase(n);
      else
        r.c_[n] = s;
    }
    return r;
  }

  QSeries operator-(const QSeries& o) const { return *this + (-o); }

  QSeries operator*(const QSeries& o) const {
    QSeries r;
    r.trunc_ = std::min(sat_add_order(trunc_, o.order()),
                        sat_add_order(o.trunc_, order()));
    for (const auto& [n, a] : c_) {
      for (const auto& [m, b] : o.c_) {
        int e = n + m;
        if (e >= r.trunc_) break;  // o.c_ ordered ascending
        Rational s = (r.c_.count(e) ? r.c_[e] : Rational(0)) + a * b;
        if (s.is_zero())
          r.c_.erase(e);
        else
          r.c_[e] = s;
      }
    }
    return r;
  }

  QSeries operator*(const Rational& s) const {
    QSeries r;
    r.trunc_ = trunc_;
    if (s.is_zero()) return r.truncate(trunc_);
    for (const auto& [n, c] : c_) r.c_[n] = c * s;
    return r;
  }

  QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
  QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  // Structural equality: same truncation and identical known coefficients.
  bool operator==(const QSeries& o) const {
    return trunc_ == o.trunc_ && c_ == o.c_;
  }
  bool operator!=(const QSeries& o) const { return !(*this == o); }

  // Mathematical agreement on the window [0, through); both operands must
  // know the window.
  bool agrees_with(const QSeries& o, int through) const {
    if (trunc_ < through || o.trunc_ < through)
      throw TruncationError("comparison window exceeds truncation order");
    for (const auto& [n, c] : c_) {
      if (n >= through) break;
      auto it = o.c_.find(n);
      if (it == o.c_.end() || it->second != c) return false;
    }
    for (const auto& [n, c] : o.c_) {
      if (n >= through) break;
      if (!c_.count(n)) return false;
    }
    return true;
  }

  std::complex<double> eval(std::complex<double> q) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc += it->second.to_double() * std::pow(q, it->first);
    return acc;
  }

 private:
  std::map<int, Rational> c_;
  int trunc_;
};

inline QSeries operator*(const Rational& s, const QSeries& q) { return q * s; }

}  // namespace meroc
