#include "meroc/elliptic.hpp"

#include <cmath>
#include <sstream>

namespace meroc {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_orders(int z_order, int q_order) {
  if (z_order < 1 || q_order < 1)
    throw DomainError("truncation orders must be >= 1");
}
}  // namespace

PkExpansion p1(int z_order, int q_order) {
  require_orders(z_order, q_order);
  PkExpansion p;
  p.k = 1;
  p.z = LaurentSeries<QSeries>::zero(-1, z_order);
  p.z.set_coeff(-1, QSeries(Rational(1)));
  for (int j = 1; j < z_order; ++j) {
    QSeries e = eisenstein_q(j + 1, q_order);
    if (!e.is_exact_zero()) p.z.set_coeff(j, e * Rational(-1));
  }
  return p;
}

PkExpansion p2(int z_order, int q_order) {
  require_orders(z_order, q_order);
  PkExpansion p;
  p.k = 2;
  p.z = LaurentSeries<QSeries>::zero(-2, z_order);
  p.z.set_coeff(-2, QSeries(Rational(1)));
  for (int j = 0; j < z_order; ++j) {
    QSeries e = eisenstein_q(j + 2, q_order) * Rational(j + 1);
    if (!e.is_exact_zero()) p.z.set_coeff(j, e);
  }
  return p;
}

PkExpansion p0(int z_order, int q_order) {
  require_orders(z_order, q_order);
  PkExpansion p;
  p.k = 0;
  p.has_log = true;
  p.log_coeff = Rational(-1);
  p.z = LaurentSeries<QSeries>::zero(0, z_order);
  for (int j = 2; j < z_order; ++j) {
    QSeries e = eisenstein_q(j, q_order) * Rational(1, j);
    if (!e.is_exact_zero()) p.z.set_coeff(j, e);
  }
  return p;
}

PkExpansion pk_derivative(const PkExpansion& p) {
  PkExpansion d;
  d.k = p.k + 1;  // index bookkeeping only; callers rescale
  d.z = p.z.derivative();
  if (p.has_log && !p.log_coeff.is_zero()) {
    // d/dz (c log z) = c / z
    QSeries cur = d.z.coeff(-1);
    d.z.set_coeff(-1, cur + QSeries(p.log_coeff));
  }
  return d;
}

PkExpansion pk(int k, int z_order, int q_order) {
  if (k < 3) throw DomainError("pk requires k >= 3; use p0/p1/p2 below that");
  require_orders(z_order, q_order);
  PkExpansion cur = p1(z_order + k - 1, q_order);
  for (int i = 0; i < k - 1; ++i) cur = pk_derivative(cur);
  Rational pre = Rational((k - 1) % 2 == 0 ? 1 : -1) /
                 Rational(factorial(static_cast<unsigned long>(k - 1)));
  PkExpansion out;
  out.k = k;
  out.z = cur.z.scale_coeffs(pre);
  return out;
}

PkExpansion pk_any(int k, int z_order, int q_order) {
  switch (k) {
    case 0: return p0(z_order, q_order);
    case 1: return p1(z_order, q_order);
    case 2: return p2(z_order, q_order);
    default: return pk(k, z_order, q_order);
  }
}

Rational cd_prefactor(int k, int l) {
  if (k < 1 || l < 1) throw DomainError("C/D indices must be >= 1");
  mpz_class num = factorial(static_cast<unsigned long>(k + l - 1));
  mpz_class den = factorial(static_cast<unsigned long>(k - 1)) *
                  factorial(static_cast<unsigned long>(l - 1));
  Rational pre(num, den);
  return k % 2 == 0 ? -pre : pre;  // (-1)^{k+1}
}

QSeries c_coeff(int k, int l, int q_order) {
  return eisenstein_q(k + l, q_order) * cd_prefactor(k, l);
}

PkExpansion d_coeff(int k, int l, int z_order, int q_order) {
  PkExpansion p = pk_any(k + l, z_order, q_order);
  p.z = p.z.scale_coeffs(cd_prefactor(k, l));
  return p;
}

QSeries difference_coeff(const LaurentSeries<QSeries>& s, SmallVariable small,
                         int a, int b) {
  int small_exp = small == SmallVariable::Z ? a : b;
  if (small_exp < 0) return QSeries();
  long n = static_cast<long>(a) + b;
  if (n >= s.truncation_order())
    throw TruncationError("difference expansion exceeds truncation order");
  QSeries c = n < s.lowest_order() ? QSeries() : s.coeff(static_cast<int>(n));
  Rational sign(b % 2 == 0 ? 1 : -1);
  return c * (binomial(n, small_exp) * sign);
}

namespace {

std::string cell_name(const char* tag, int k, int a, int b) {
  std::ostringstream os;
  os << tag << " k=" << k << " z^" << a << " w^" << b;
  return os.str();
}

bool q_agree(const QSeries& x, const QSeries& y, int q_order) {
  return x.truncation_order() >= q_order && y.truncation_order() >= q_order &&
         x.agrees_with(y, q_order);
}

}  // namespace

IdentityReport verify_expansion_identities(int zw_order, int q_order, int k_max) {
  if (zw_order < 2) throw DomainError("identity checks need zw_order >= 2");
  require_orders(zw_order, q_order);
  IdentityReport rep;

  // (a) P2(tau, z-w) - 1/(z-w)^2 = sum C(k,l) z^{l-1} w^{k-1}.
  {
    PkExpansion base = p2(2 * zw_order + 1, q_order);
    LaurentSeries<QSeries> reg = base.z;
    reg.set_coeff(-2, QSeries());  // strip the double pole
    for (int a = 0; a < zw_order; ++a) {
      for (int b = 0; b < zw_order; ++b) {
        QSeries lhs = difference_coeff(reg, SmallVariable::W, a, b);
        QSeries rhs = c_coeff(b + 1, a + 1, q_order);
        if (!q_agree(lhs, rhs, q_order)) {
          rep.ok = false;
          rep.first_failure = cell_name("identity-a", 0, a, b);
          return rep;
        }
      }
    }
  }

  // (b) P_{k+1}(tau,z) = 1/z^{k+1} + (1/k) sum_l C(k,l) z^{l-1}.
  for (int k = 1; k <= k_max; ++k) {
    PkExpansion lhs = pk_any(k + 1, zw_order, q_order);
    for (int j = -(k + 1); j < zw_order; ++j) {
      QSeries want;
      if (j == -(k + 1))
        want = QSeries(Rational(1));
      else if (j >= 0)
        want = c_coeff(k, j + 1, q_order) * Rational(1, k);
      QSeries got = lhs.z.coeff(j);
      if (!q_agree(got, want, q_order)) {
        rep.ok = false;
        rep.first_failure = cell_name("identity-b", k, j, 0);
        return rep;
      }
    }
  }

  // (c) P_{k+1}(tau, z-w) = (1/k) sum_l D(k,l,w) z^{l-1}, region |z| < |w|.
  for (int k = 1; k <= k_max; ++k) {
    PkExpansion lhs = pk_any(k + 1, 2 * zw_order + k + 2, q_order);
    for (int a = 0; a < zw_order; ++a) {
      PkExpansion d = d_coeff(k, a + 1, zw_order, q_order);
      for (int b = -(k + a + 1); b < zw_order; ++b) {
        QSeries want = b < d.z.lowest_order() ? QSeries() : d.z.coeff(b);
        want = want * Rational(1, k);
        QSeries got = difference_coeff(lhs.z, SmallVariable::Z, a, b);
        if (!q_agree(got, want, q_order)) {
          rep.ok = false;
          rep.first_failure = cell_name("identity-c", k, a, b);
          return rep;
        }
      }
    }
  }

  return rep;
}

std::complex<double> p2_qz(std::complex<double> tau, std::complex<double> zval,
                           int terms) {
  if (tau.imag() <= 0.0) throw DomainError("p2_qz requires Im(tau) > 0");
  std::complex<double> q = std::exp(std::complex<double>(0.0, 2.0 * kPi) * tau);
  std::complex<double> qz = std::exp(zval);
  if (std::abs(qz - 1.0) < 1e-14)
    throw DomainError("p2_qz pole: z lies on 2 pi i Z");
  double aq = std::abs(q);
  double aqz = std::abs(qz);
  if (!(aq < aqz && aqz < 1.0 / aq))
    throw DomainError("p2_qz outside the annulus |q| < |q_z| < 1/|q|");
  std::complex<double> acc = qz / ((qz - 1.0) * (qz - 1.0));
  std::complex<double> qn(1.0, 0.0);
  std::complex<double> qzn(1.0, 0.0);
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    qzn *= qz;
    acc += static_cast<double>(n) * qn / (1.0 - qn) * (qzn + 1.0 / qzn);
  }
  return acc;
}

std::complex<double> eval_pk(const PkExpansion& p, std::complex<double> tau,
                             std::complex<double> zval) {
  if (p.has_log)
    throw UnsupportedError("numeric evaluation of the logarithmic P_0");
  if (tau.imag() <= 0.0) throw DomainError("eval_pk requires Im(tau) > 0");
  std::complex<double> q = std::exp(std::complex<double>(0.0, 2.0 * kPi) * tau);
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [n, c] : p.z.coefficients())
    acc += c.eval(q) * std::pow(zval, static_cast<double>(n));
  return acc;
}

}  // namespace meroc
