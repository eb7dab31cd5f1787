#pragma once

#include <map>
#include <utility>
#include <vector>

#include "meroc/polynomial.hpp"

namespace meroc {

// Element of Q[z_1..z_l] localized at the pairwise differences (z_i - z_j)
// and at the coordinates z_j themselves.  Index 0 in a pole key denotes the
// origin insertion point z_0 = 0, so the admissible denominator factors are
//
//   key (0, j)  ->  z_j          (pole against the origin)
//   key (i, j)  ->  z_i - z_j    (1 <= i < j <= arity)
//
// Values are kept reduced: no factor with positive pole order divides the
// numerator, and a zero numerator carries no poles.  General denominators
// are rejected by construction.
class RationalFunction {
 public:
  using PoleKey = std::pair<int, int>;

  explicit RationalFunction(int arity = 0)
      : arity_(arity), num_(arity) {}

  static RationalFunction from_polynomial(Polynomial num) {
    RationalFunction f(num.nvars());
    f.num_ = std::move(num);
    return f;
  }

  static RationalFunction constant(int arity, const Rational& c) {
    return from_polynomial(Polynomial::constant(arity, c));
  }

  // 1 / factor(i,j)^order.
  static RationalFunction pole(int arity, int i, int j, int order) {
    RationalFunction f(arity);
    f.num_ = Polynomial::constant(arity, Rational(1));
    if (order > 0) f.poles_[normalize_key(arity, i, j)] = order;
    return f;
  }

  int arity() const { return arity_; }
  const Polynomial& numerator() const { return num_; }
  const std::map<PoleKey, int>& pole_orders() const { return poles_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return poles_.empty(); }

  int pole_order(int i, int j) const {
    auto it = poles_.find(normalize_key(arity_, i, j));
    return it == poles_.end() ? 0 : it->second;
  }

  Polynomial factor(const PoleKey& key) const {
    return factor_poly(arity_, key);
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  RationalFunction operator+(const RationalFunction& o) const {
    require_same(o);
    RationalFunction r(arity_);
    std::map<PoleKey, int> all = poles_;
    for (const auto& [k, e] : o.poles_)
      all[k] = std::max(e, all.count(k) ? all[k] : 0);
    Polynomial left = num_;
    Polynomial right = o.num_;
    for (const auto& [k, e] : all) {
      int ea = pole_order_key(k);
      int eb = o.pole_order_key(k);
      Polynomial f = factor_poly(arity_, k);
      for (int t = 0; t < e - ea; ++t) left *= f;
      for (int t = 0; t < e - eb; ++t) right *= f;
    }
    r.num_ = left + right;
    r.poles_ = std::move(all);
    r.reduce();
    return r;
  }

  RationalFunction operator-(const RationalFunction& o) const {
    return *this + (-o);
  }

  RationalFunction operator*(const RationalFunction& o) const {
    require_same(o);
    RationalFunction r(arity_);
    r.num_ = num_ * o.num_;
    r.poles_ = poles_;
    for (const auto& [k, e] : o.poles_) r.poles_[k] += e;
    r.reduce();
    return r;
  }

  RationalFunction operator*(const Rational& s) const {
    RationalFunction r = *this;
    r.num_ = r.num_ * s;
    if (r.num_.is_zero()) r.poles_.clear();
    return r;
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  bool operator==(const RationalFunction& o) const {
    return arity_ == o.arity_ && poles_ == o.poles_ && num_ == o.num_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction derivative(int v) const {
    if (v < 1 || v > arity_)
      throw ValidationError("derivative variable out of range");
    RationalFunction r(arity_);
    if (poles_.empty()) {
      r.num_ = num_.derivative(v - 1);
      return r;
    }
    // d(N / prod f^e) = [dN * prod f - N * sum e_j df_j prod_{k != j} f_k]
    //                   / prod f^{e+1}
    Polynomial prod_all = Polynomial::constant(arity_, Rational(1));
    for (const auto& [k, e] : poles_) prod_all *= factor_poly(arity_, k);
    Polynomial acc = num_.derivative(v - 1) * prod_all;
    for (const auto& [k, e] : poles_) {
      Rational df = factor_derivative(k, v);
      if (df.is_zero()) continue;
      Polynomial rest = Polynomial::constant(arity_, Rational(1));
      for (const auto& [k2, e2] : poles_)
        if (k2 != k) rest *= factor_poly(arity_, k2);
      acc -= num_ * rest * (df * Rational(e));
    }
    r.num_ = std::move(acc);
    for (const auto& [k, e] : poles_) r.poles_[k] = e + 1;
    r.reduce();
    return r;
  }

  // Simultaneous relabeling of the points: old variable i becomes perm[i-1]
  // (1-based values, a bijection on 1..arity).
  RationalFunction permute(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != arity_)
      throw ValidationError("permutation has wrong arity");
    std::vector<int> poly_perm(arity_);
    for (int i = 0; i < arity_; ++i) poly_perm[i] = perm[i] - 1;
    RationalFunction r(arity_);
    r.num_ = num_.permute_vars(poly_perm);
    int flips = 0;
    for (const auto& [k, e] : poles_) {
      int a = k.first == 0 ? 0 : perm[k.first - 1];
      int b = perm[k.second - 1];
      if (a > b && a != 0) {
        std::swap(a, b);
        flips += e;  // (z_a - z_b) = -(z_b - z_a)
      }
      r.poles_[{a, b}] += e;
    }
    if (flips % 2 != 0) r.num_ = -r.num_;
    return r;
  }

  Rational eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != arity_)
      throw ValidationError("evaluation point has wrong arity");
    Rational den(1);
    for (const auto& [k, e] : poles_) {
      Rational f = k.first == 0 ? point[k.second - 1]
                                : point[k.first - 1] - point[k.second - 1];
      if (f.is_zero()) throw DomainError("evaluation at a pole");
      den *= f.pow(e);
    }
    return num_.eval(point) / den;
  }

  // Total degree as a rational function when homogeneous; nullopt otherwise.
  // Zero reports homogeneous of every degree (returns 0).
  std::optional<int> homogeneous_degree() const {
    int d = 0;
    if (!num_.is_homogeneous(&d)) return std::nullopt;
    if (num_.is_zero()) return 0;
    int den = 0;
    for (const auto& [k, e] : poles_) den += e;
    return d - den;
  }

 private:
  static PoleKey normalize_key(int arity, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j < 1 || j > arity || i == j)
      throw ValidationError("invalid pole pair");
    return {i, j};
  }

  static Polynomial factor_poly(int arity, const PoleKey& k) {
    if (k.first == 0) return Polynomial::variable(arity, k.second - 1);
    return Polynomial::variable(arity, k.first - 1) -
           Polynomial::variable(arity, k.second - 1);
  }

  Rational factor_derivative(const PoleKey& k, int v) const {
    if (k.first == 0) return Rational(k.second == v ? 1 : 0);
    if (k.first == v) return Rational(1);
    if (k.second == v) return Rational(-1);
    return Rational(0);
  }

  int pole_order_key(const PoleKey& k) const {
    auto it = poles_.find(k);
    return it == poles_.end() ? 0 : it->second;
  }

  void require_same(const RationalFunction& o) const {
    if (arity_ != o.arity_)
      throw ValidationError("rational function arity mismatch");
  }

  void reduce() {
    if (num_.is_zero()) {
      poles_.clear();
      return;
    }
    for (auto it = poles_.begin(); it != poles_.end();) {
      while (it->second > 0) {
        std::optional<Polynomial> q =
            it->first.first == 0 ? num_.divide_by_variable(it->first.second - 1)
                                 : num_.divide_by_difference(it->first.first - 1,
                                                             it->first.second - 1);
        if (!q) break;
        num_ = std::move(*q);
        it->second -= 1;
      }
      if (it->second == 0)
        it = poles_.erase(it);
      else
        ++it;
    }
  }

  int arity_;
  Polynomial num_;
  std::map<PoleKey, int> poles_;
};

inline RationalFunction operator*(const Rational& s, const RationalFunction& f) {
  return f * s;
}

}  // namespace meroc
