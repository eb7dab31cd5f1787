#pragma once

#include <complex>
#include <string>

#include "meroc/laurent.hpp"
#include "meroc/quasimodular.hpp"

namespace meroc {

// Truncated expansion of one of the elliptic functions P_k: a Laurent
// series in z whose coefficients are q-series.  P_0 carries a logarithmic
// leading term which is kept as a symbolic marker (log_coeff * log z), never
// evaluated numerically.
struct PkExpansion {
  int k = 0;
  bool has_log = false;
  Rational log_coeff = Rational(0);
  LaurentSeries<QSeries> z;

  int z_order() const { return z.truncation_order(); }
};

// P_1 = 1/z - sum_{k >= 2} E_k z^{k-1}
PkExpansion p1(int z_order, int q_order);
// P_2 = 1/z^2 + sum_{k >= 2} (k-1) E_k z^{k-2}
PkExpansion p2(int z_order, int q_order);
// P_0 = -log z + sum_{k >= 2} (1/k) E_k z^k  (principal branch marker)
PkExpansion p0(int z_order, int q_order);
// P_k = ((-1)^{k-1}/(k-1)!) d^{k-1} P_1 / dz^{k-1} for k >= 3
PkExpansion pk(int k, int z_order, int q_order);
// Dispatcher over all k >= 0.
PkExpansion pk_any(int k, int z_order, int q_order);

// Termwise -d/dz is not what this does: plain d/dz, with the log marker
// differentiating to log_coeff / z.
PkExpansion pk_derivative(const PkExpansion& p);

// C(k,l) = (-1)^{k+1} (k+l-1)!/((k-1)!(l-1)!) E_{k+l}
QSeries c_coeff(int k, int l, int q_order);
// D(k,l,z) = same prefactor times P_{k+l}(tau, z)
PkExpansion d_coeff(int k, int l, int z_order, int q_order);
Rational cd_prefactor(int k, int l);

// Coefficient of z^a w^b in s(z - w).  SmallVariable selects the expansion
// region: the named variable is the one assumed smaller in modulus; the two
// regions agree on polynomial input.
enum class SmallVariable { Z, W };
QSeries difference_coeff(const LaurentSeries<QSeries>& s, SmallVariable small,
                         int a, int b);

struct IdentityReport {
  bool ok = true;
  std::string first_failure;  // empty on success
};

// Exact coefficient checks of the three expansion identities relating P_k,
// C(k,l) and D(k,l,w), through z- and w-order `zw_order` and q-order
// `q_order`, for 1 <= k <= k_max.
IdentityReport verify_expansion_identities(int zw_order, int q_order, int k_max);

// Numeric P_2 via the q_z = exp(z) representation:
//   q_z/(q_z-1)^2 + sum_{n=1}^{N} n q^n/(1-q^n) (q_z^n + q_z^{-n}).
// Valid for |q| < |q_z| < 1/|q|; z on 2 pi i Z is a pole.
std::complex<double> p2_qz(std::complex<double> tau, std::complex<double> zval,
                           int terms);

// Numeric value of a PkExpansion at (tau, z); rejects the logarithmic P_0.
std::complex<double> eval_pk(const PkExpansion& p, std::complex<double> tau,
                             std::complex<double> zval);

}  // namespace meroc
