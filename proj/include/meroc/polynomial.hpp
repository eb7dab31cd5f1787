#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "meroc/rational.hpp"

namespace meroc {

// Sparse multivariate polynomial over Q with a fixed variable count.
// Exponent vectors always have length nvars(); the zero polynomial has an
// empty term map.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_[Exponents(nvars, 0)] = c;
    return p;
  }

  static Polynomial variable(int nvars, int i) {
    return monomial(nvars, unit_exps(nvars, i), Rational(1));
  }

  static Polynomial monomial(int nvars, const Exponents& e, const Rational& c) {
    check_exps(nvars, e);
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Rational coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponents& e, const Rational& c) {
    check_exps(nvars_, e);
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  Polynomial operator+(const Polynomial& o) const {
    require_same_vars(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  Polynomial operator*(const Polynomial& o) const {
    require_same_vars(o);
    Polynomial r(nvars_);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : o.terms_) {
        Exponents e(nvars_);
        for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  Polynomial operator*(const Rational& s) const {
    Polynomial r(nvars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(unsigned e) const {
    Polynomial acc = constant(nvars_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1u) acc *= base;
      base = e > 1 ? base * base : base;
      e >>= 1u;
    }
    return acc;
  }

  Polynomial derivative(int i) const {
    check_var(i);
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponents d = e;
      d[i] -= 1;
      r.add_term(d, c * Rational(e[i]));
    }
    return r;
  }

  // Substitutes variable i by an arbitrary polynomial in the same ring.
  Polynomial substitute(int i, const Polynomial& p) const {
    check_var(i);
    require_same_vars(p);
    Polynomial r(nvars_);
    std::map<int, Polynomial> powers;  // p^k cache
    powers[0] = constant(nvars_, Rational(1));
    for (const auto& [e, c] : terms_) {
      int k = e[i];
      if (!powers.count(k)) {
        int have = powers.rbegin()->first;
        Polynomial acc = powers.rbegin()->second;
        for (int j = have + 1; j <= k; ++j) {
          acc *= p;
          powers[j] = acc;
        }
      }
      Exponents rest = e;
      rest[i] = 0;
      r += monomial(nvars_, rest, c) * powers[k];
    }
    return r;
  }

  Polynomial substitute_value(int i, const Rational& v) const {
    return substitute(i, constant(nvars_, v));
  }

  Polynomial shift_var(int i, const Rational& c) const {
    Polynomial p = variable(nvars_, i) + constant(nvars_, c);
    return substitute(i, p);
  }

  Rational eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw ValidationError("evaluation point has wrong arity");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < nvars_; ++i)
        if (e[i] != 0) t *= point[i].pow(e[i]);
      acc += t;
    }
    return acc;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;  // -1 for the zero polynomial
  }

  int degree_in(int i) const {
    check_var(i);
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }

  // True when all terms share one total degree (vacuously for zero).
  bool is_homogeneous(int* degree = nullptr) const {
    int d = -2;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      if (d == -2)
        d = s;
      else if (d != s)
        return false;
    }
    if (degree) *degree = (d == -2 ? 0 : d);
    return true;
  }

  // Exact division by (x_i - x_j); nullopt when not divisible.
  std::optional<Polynomial> divide_by_difference(int i, int j) const {
    check_var(i);
    check_var(j);
    // Collect as univariate in x_i, coefficients polynomial in the rest.
    std::map<int, Polynomial> by_deg;
    int top = -1;
    for (const auto& [e, c] : terms_) {
      int k = e[i];
      Exponents rest = e;
      rest[i] = 0;
      auto it = by_deg.find(k);
      if (it == by_deg.end()) it = by_deg.emplace(k, Polynomial(nvars_)).first;
      it->second.add_term(rest, c);
      top = std::max(top, k);
    }
    if (top < 1) {
      if (is_zero()) return Polynomial(nvars_);
      return std::nullopt;
    }
    auto at = [&](int k) {
      auto it = by_deg.find(k);
      return it == by_deg.end() ? Polynomial(nvars_) : it->second;
    };
    Polynomial xj = variable(nvars_, j);
    // Horner synthetic division by (x_i - x_j).
    std::vector<Polynomial> b(top, Polynomial(nvars_));
    b[top - 1] = at(top);
    for (int k = top - 1; k >= 1; --k) b[k - 1] = at(k) + xj * b[k];
    Polynomial rem = at(0) + xj * b[0];
    if (!rem.is_zero()) return std::nullopt;
    Polynomial q(nvars_);
    for (int k = 0; k < top; ++k) {
      Exponents e = unit_exps(nvars_, i);
      e[i] = k;
      q += monomial(nvars_, e, Rational(1)) * b[k];
    }
    return q;
  }

  // Exact division by x_i; nullopt when some term lacks the variable.
  std::optional<Polynomial> divide_by_variable(int i) const {
    check_var(i);
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) return std::nullopt;
      Exponents d = e;
      d[i] -= 1;
      r.terms_[d] = c;
    }
    return r;
  }

  // perm[i] = new index of old variable i (a bijection on 0..nvars-1).
  Polynomial permute_vars(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != nvars_)
      throw ValidationError("permutation has wrong arity");
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponents d(nvars_, 0);
      for (int i = 0; i < nvars_; ++i) d[perm[i]] = e[i];
      r.add_term(d, c);
    }
    return r;
  }

  // Reinterprets the polynomial in a larger variable set; old variable i
  // becomes embed[i].
  Polynomial embed_vars(int new_nvars, const std::vector<int>& embed) const {
    Polynomial r(new_nvars);
    for (const auto& [e, c] : terms_) {
      Exponents d(new_nvars, 0);
      for (int i = 0; i < nvars_; ++i) {
        if (embed[i] < 0 || embed[i] >= new_nvars)
          throw ValidationError("embedding index out of range");
        d[embed[i]] += e[i];
      }
      r.add_term(d, c);
    }
    return r;
  }

 private:
  static Exponents unit_exps(int nvars, int i) {
    Exponents e(nvars, 0);
    if (i < 0 || i >= nvars) throw ValidationError("variable index out of range");
    e[i] = 1;
    return e;
  }
  static void check_exps(int nvars, const Exponents& e) {
    if (static_cast<int>(e.size()) != nvars)
      throw ValidationError("exponent vector has wrong arity");
    for (int x : e)
      if (x < 0) throw ValidationError("negative exponent in polynomial");
  }
  void check_var(int i) const {
    if (i < 0 || i >= nvars_)
      throw ValidationError("variable index out of range");
  }
  void require_same_vars(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
      throw ValidationError("polynomial arity mismatch");
  }

  int nvars_;
  std::map<Exponents, Rational> terms_;
};

inline Polynomial operator*(const Rational& s, const Polynomial& p) {
  return p * s;
}

}  // namespace meroc
