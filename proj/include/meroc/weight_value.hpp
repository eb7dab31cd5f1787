#pragma once

#include <complex>
#include <map>
#include <tuple>

#include "meroc/qseries.hpp"

namespace meroc {

// Truncated power series in two independent q-variables (one per edge
// label).  A coefficient at (e1, e2) is known iff e1 < trunc1 and
// e2 < trunc2; the exact-order sentinel marks polynomials.
class BiQSeries {
 public:
  BiQSeries() : t1_(kExactOrder), t2_(kExactOrder) {}
  explicit BiQSeries(const Rational& c) : BiQSeries() {
    if (!c.is_zero()) c_[{0, 0}] = c;
  }

  static BiQSeries from_qseries(const QSeries& s, int var) {
    if (var != 1 && var != 2) throw ValidationError("variable must be 1 or 2");
    BiQSeries r;
    if (var == 1)
      r.t1_ = s.truncation_order();
    else
      r.t2_ = s.truncation_order();
    for (const auto& [n, c] : s.coefficients())
      r.c_[var == 1 ? std::make_pair(n, 0) : std::make_pair(0, n)] = c;
    return r;
  }

  int trunc1() const { return t1_; }
  int trunc2() const { return t2_; }
  bool is_exact_zero() const {
    return c_.empty() && t1_ == kExactOrder && t2_ == kExactOrder;
  }
  bool known_part_is_zero() const { return c_.empty(); }
  const std::map<std::pair<int, int>, Rational>& coefficients() const {
    return c_;
  }

  Rational coeff(int e1, int e2) const {
    if (e1 >= t1_ || e2 >= t2_)
      throw TruncationError("bivariate coefficient beyond truncation");
    auto it = c_.find({e1, e2});
    return it == c_.end() ? Rational(0) : it->second;
  }

  int ord1() const {
    if (c_.empty()) return t1_;
    int m = kExactOrder;
    for (const auto& [e, c] : c_) m = std::min(m, e.first);
    return m;
  }
  int ord2() const {
    if (c_.empty()) return t2_;
    int m = kExactOrder;
    for (const auto& [e, c] : c_) m = std::min(m, e.second);
    return m;
  }

  BiQSeries operator-() const {
    BiQSeries r;
    r.t1_ = t1_;
    r.t2_ = t2_;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
  }

  BiQSeries operator+(const BiQSeries& o) const {
    BiQSeries r;
    r.t1_ = std::min(t1_, o.t1_);
    r.t2_ = std::min(t2_, o.t2_);
    for (const auto& [e, c] : c_)
      if (e.first < r.t1_ && e.second < r.t2_) r.c_[e] = c;
    for (const auto& [e, c] : o.c_) {
      if (e.first >= r.t1_ || e.second >= r.t2_) continue;
      auto it = r.c_.find(e);
      if (it == r.c_.end()) {
        r.c_[e] = c;
      } else {
        it->second += c;
        if (it->second.is_zero()) r.c_.erase(it);
      }
    }
    return r;
  }

  BiQSeries operator-(const BiQSeries& o) const { return *this + (-o); }

  BiQSeries operator*(const BiQSeries& o) const {
    BiQSeries r;
    r.t1_ = std::min(sat_add_order(t1_, o.ord1()), sat_add_order(o.t1_, ord1()));
    r.t2_ = std::min(sat_add_order(t2_, o.ord2()), sat_add_order(o.t2_, ord2()));
    for (const auto& [ea, ca] : c_) {
      for (const auto& [eb, cb] : o.c_) {
        int e1 = ea.first + eb.first;
        int e2 = ea.second + eb.second;
        if (e1 >= r.t1_ || e2 >= r.t2_) continue;
        auto key = std::make_pair(e1, e2);
        auto it = r.c_.find(key);
        if (it == r.c_.end()) {
          r.c_[key] = ca * cb;
        } else {
          it->second += ca * cb;
          if (it->second.is_zero()) r.c_.erase(it);
        }
      }
    }
    return r;
  }

  BiQSeries operator*(const Rational& s) const {
    BiQSeries r;
    r.t1_ = t1_;
    r.t2_ = t2_;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : c_) r.c_[e] = c * s;
    return r;
  }

  BiQSeries& operator+=(const BiQSeries& o) { return *this = *this + o; }
  BiQSeries& operator*=(const BiQSeries& o) { return *this = *this * o; }

  bool operator==(const BiQSeries& o) const {
    return t1_ == o.t1_ && t2_ == o.t2_ && c_ == o.c_;
  }
  bool operator!=(const BiQSeries& o) const { return !(*this == o); }

  bool agrees_with(const BiQSeries& o, int n1, int n2) const {
    if (t1_ < n1 || t2_ < n2 || o.t1_ < n1 || o.t2_ < n2)
      throw TruncationError("comparison window exceeds truncation");
    for (const auto& [e, c] : c_) {
      if (e.first >= n1 || e.second >= n2) continue;
      auto it = o.c_.find(e);
      if (it == o.c_.end() || it->second != c) return false;
    }
    for (const auto& [e, c] : o.c_) {
      if (e.first >= n1 || e.second >= n2) continue;
      if (!c_.count(e)) return false;
    }
    return true;
  }

  // Identify the two q-variables (equal-parameter specialization); the
  // merged truncation is the conservative min of the two.
  QSeries merge_variables() const {
    int t = std::min(t1_, t2_);
    QSeries r = QSeries::zero(t);
    for (const auto& [e, c] : c_) {
      int n = e.first + e.second;
      if (n >= t) continue;
      r.set_coeff(n, r.coeff(n) + c);
    }
    return r;
  }

  std::complex<double> eval(std::complex<double> q1,
                            std::complex<double> q2) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : c_)
      acc += c.to_double() * std::pow(q1, e.first) * std::pow(q2, e.second);
    return acc;
  }

 private:
  std::map<std::pair<int, int>, Rational> c_;
  int t1_, t2_;
};

// Squarefree part; writes the extracted square root into *square.
long long squarefree_part(long long n, long long* square);

// Element of the exact necklace weight ring: a finite sum of terms
//   coeff(q1, q2) * eps1^{e1/2} * eps2^{e2/2} * sqrt(root),
// with doubled integer eps-exponents and squarefree positive roots.
class WeightValue {
 public:
  struct Key {
    int eps1_doubled = 0;
    int eps2_doubled = 0;
    long long root = 1;
    bool operator<(const Key& o) const {
      return std::tie(eps1_doubled, eps2_doubled, root) <
             std::tie(o.eps1_doubled, o.eps2_doubled, o.root);
    }
    bool operator==(const Key& o) const {
      return eps1_doubled == o.eps1_doubled && eps2_doubled == o.eps2_doubled &&
             root == o.root;
    }
  };

  WeightValue() = default;
  WeightValue(long v) {  // NOLINT: ring literals for generic code
    if (v != 0) terms_[Key{}] = BiQSeries(Rational(v));
  }

  static WeightValue term(int eps1_doubled, int eps2_doubled, long long root,
                          BiQSeries coeff);

  const std::map<Key, BiQSeries>& terms() const { return terms_; }
  bool is_exact_zero() const;

  WeightValue operator-() const;
  WeightValue operator+(const WeightValue& o) const;
  WeightValue operator-(const WeightValue& o) const { return *this + (-o); }
  WeightValue operator*(const WeightValue& o) const;
  WeightValue& operator+=(const WeightValue& o) { return *this = *this + o; }
  WeightValue& operator*=(const WeightValue& o) { return *this = *this * o; }
  bool operator==(const WeightValue& o) const { return terms_ == o.terms_; }
  bool operator!=(const WeightValue& o) const { return !(*this == o); }

  // Mathematical agreement of all terms through the q-window (n1, n2).
  bool agrees_with(const WeightValue& o, int n1, int n2) const;

  // Equal-parameter view: eps exponents add, q-variables merge.
  std::map<std::pair<int, long long>, QSeries> merge_parameters() const;

 private:
  void add_term(const Key& k, const BiQSeries& c);
  std::map<Key, BiQSeries> terms_;
};

}  // namespace meroc
