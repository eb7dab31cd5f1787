#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "meroc/errors.hpp"

namespace meroc {

// Exact rational scalar.  Always stored canonically: gcd(|num|, den) = 1,
// den > 0.  Arbitrary-precision integers via GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, scalar literals
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Parses "p", "-p" or "p/q" in base 10.
  static Rational parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw ValidationError("cannot parse rational '" + s + "'");
    q.canonicalize();
    if (q.get_den() == 0)
      throw ValidationError("zero denominator in rational '" + s + "'");
    return Rational(std::move(q));
  }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw DomainError("division by zero rational");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  Rational inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e)
                            : static_cast<unsigned long>(e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
    return Rational(n, d);
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const { return v_.get_d(); }

  // "p" when integral, "p/q" otherwise.
  std::string str() const {
    return is_integer() ? num().get_str() : v_.get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class v_;
};

inline mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Binomial coefficient for arbitrary integer upper index (generalized):
// binom(n, k) = n (n-1) ... (n-k+1) / k!.
inline Rational binomial(long n, long k) {
  if (k < 0) return Rational(0);
  mpz_class num(1);
  for (long i = 0; i < k; ++i) num *= mpz_class(n - i);
  return Rational(num, factorial(static_cast<unsigned long>(k)));
}

// Eigen and generic code occasionally probe these through ADL.
inline const Rational& conj(const Rational& x) { return x; }
inline const Rational& real(const Rational& x) { return x; }
inline Rational imag(const Rational&) { return Rational(0); }
inline Rational abs2(const Rational& x) { return x * x; }
inline Rational abs(const Rational& x) { return x.abs(); }

}  // namespace meroc
