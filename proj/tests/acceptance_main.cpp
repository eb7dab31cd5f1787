// Acceptance suite: one pass/fail line per criterion, exact checks at the
// stated tolerances, nonzero exit on any failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "meroc/cech.hpp"
#include "meroc/double_complex.hpp"
#include "meroc/elliptic.hpp"
#include "meroc/lie.hpp"
#include "meroc/necklace.hpp"

using namespace meroc;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  if (ok && secs > budget_seconds) {
    ok = false;
    detail = "runtime " + std::to_string(secs) + "s exceeds budget";
  }
  std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", number,
              label.c_str(), secs);
  if (!ok) {
    ++g_failures;
    if (!detail.empty()) std::printf("       %s\n", detail.c_str());
  }
}

std::string run_shell(const std::string& cmd, int* exit_code) {
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return out;
  }
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  *exit_code = WEXITSTATUS(pclose(pipe));
  return out;
}

bool check_eisenstein_bernoulli(std::string& detail) {
  for (int k = 2; k <= 12; k += 2) {
    if (eisenstein_q(k, 50).coeff(0) != -bernoulli(k) / Rational(factorial(k))) {
      detail = "constant term mismatch at k=" + std::to_string(k);
      return false;
    }
  }
  if (bernoulli(2) != Rational(1, 6) || bernoulli(4) != Rational(-1, 30)) {
    detail = "B2/B4 mismatch";
    return false;
  }
  if (bernoulli(2) / Rational(factorial(2)) != Rational(1, 12) ||
      bernoulli(4) / Rational(factorial(4)) != Rational(-1, 720)) {
    detail = "displayed generating-function coefficients mismatch";
    return false;
  }
  return true;
}

bool check_derivative_chain(std::string& detail) {
  const int nz = 12, nq = 20;
  PkExpansion p1e = p1(nz + 1, nq);
  PkExpansion p2e = p2(nz, nq);
  LaurentSeries<QSeries> lhs = pk_derivative(p1e).z.scale_coeffs(Rational(-1));
  for (int j = -2; j < nz; ++j) {
    if (!(lhs.coeff(j) == p2e.z.coeff(j))) {
      detail = "P2 != -dP1/dz at z^" + std::to_string(j);
      return false;
    }
  }
  PkExpansion p0e = p0(nz + 1, nq);
  LaurentSeries<QSeries> lhs0 = pk_derivative(p0e).z.scale_coeffs(Rational(-1));
  PkExpansion p1t = p1(nz, nq);
  for (int j = -1; j < nz; ++j) {
    if (!(lhs0.coeff(j) == p1t.z.coeff(j))) {
      detail = "P1 != -dP0/dz at z^" + std::to_string(j);
      return false;
    }
  }
  return true;
}

bool check_expansion_identities(std::string& detail) {
  IdentityReport rep = verify_expansion_identities(8, 12, 5);
  if (!rep.ok) detail = rep.first_failure;
  return rep.ok;
}

bool check_cd_symmetry(std::string& detail) {
  for (int k = 1; k <= 6; ++k) {
    for (int l = 1; l <= 6; ++l) {
      if (!(c_coeff(k, l, 10) == c_coeff(l, k, 10))) {
        detail = "C symmetry fails at " + std::to_string(k) + "," +
                 std::to_string(l);
        return false;
      }
      PkExpansion a = d_coeff(k, l, 6, 8);
      PkExpansion b = d_coeff(l, k, 6, 8);
      Rational sign((k + l) % 2 == 0 ? 1 : -1);
      if (!(a.z == b.z.scale_coeffs(sign))) {
        detail = "D antisymmetry fails at " + std::to_string(k) + "," +
                 std::to_string(l);
        return false;
      }
    }
  }
  return true;
}

bool check_numeric_cross(std::string& detail) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> re_tau(-0.45, 0.45);
  std::uniform_real_distribution<double> im_tau(0.8, 1.8);
  std::uniform_real_distribution<double> box(-0.5, 0.5);
  int tested = 0;
  while (tested < 20) {
    std::complex<double> tau(re_tau(rng), im_tau(rng));
    std::complex<double> z(box(rng), box(rng));
    if (std::abs(z) < 0.05 || std::abs(z) > 0.5) continue;
    std::complex<double> via_qz = p2_qz(tau, z, 80);
    std::complex<double> via_series = eval_pk(p2(40, 24), tau, z);
    if (std::abs(via_qz - via_series) > 1e-8 * std::abs(via_series)) {
      std::ostringstream os;
      os << "mismatch at tau=" << tau << " z=" << z;
      detail = os.str();
      return false;
    }
    ++tested;
  }
  return true;
}

bool check_necklace_equivalence(std::string& detail) {
  for (int m = 2; m <= 6; ++m) {
    for (int cutoff = 1; cutoff <= 5; ++cutoff) {
      for (int first = 1; first <= 2; ++first) {
        for (int k = 1; k <= cutoff; ++k) {
          for (int l = 1; l <= cutoff; ++l) {
            ExactNecklaceSum s =
                necklace_sum_exact(m, k, l, cutoff, first, 4);
            if (!s.equal) {
              detail = "paths disagree at m=" + std::to_string(m) +
                       " cutoff=" + std::to_string(cutoff);
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

bool check_nilpotency_suite(std::string& detail) {
  // Cech on five fixture nerves.
  std::vector<std::vector<Face>> nerves = {
      {{1, 2}, {2, 3}, {1, 3}},
      {{1, 2, 3}},
      {{1}},
      {{1, 2}, {2, 3}, {3, 4}, {1, 4}},
      {{1, 2}, {3, 4}},
  };
  for (size_t i = 0; i < nerves.size(); ++i) {
    Nerve nerve(nerves[i]);
    CechCoefficients coeffs = CechCoefficients::constant(nerve, 1);
    for (CechConvention conv :
         {CechConvention::Strings, CechConvention::Simplicial}) {
      NilpotencyReport rep =
          cech_complex(nerve, coeffs, conv).chain.verify_nilpotency();
      if (!rep.ok) {
        detail = "Cech nerve " + std::to_string(i) + ": " + rep.detail;
        return false;
      }
    }
  }
  // CE on abelian / Heisenberg / sl2, trivial coefficients and a PBW window.
  std::vector<LieAlgebra> algebras = {LieAlgebra::abelian(3),
                                      LieAlgebra::heisenberg(),
                                      LieAlgebra::sl2()};
  for (size_t i = 0; i < algebras.size(); ++i) {
    CEOptions opts;
    opts.p_max = 3;
    NilpotencyReport rep =
        ce_complex(algebras[i], opts).verify_nilpotency_windowed();
    if (!rep.ok) {
      detail = "CE algebra " + std::to_string(i) + ": " + rep.detail;
      return false;
    }
    CEOptions pbw = opts;
    pbw.pbw_cutoff = 2;
    rep = ce_complex(algebras[i], pbw).verify_nilpotency_windowed();
    if (!rep.ok) {
      detail = "CE/PBW algebra " + std::to_string(i) + ": " + rep.detail;
      return false;
    }
  }
  // Double complex on the polynomial model.
  ModelAlgebra model;
  model.degree_bound = 4;
  DoubleComplexOptions opts;
  opts.degree_bound = 4;
  opts.l_max = 2;
  opts.k_max = 3;
  NilpotencyReport rep = build_double_complex(model, opts).complex.verify_nilpotency();
  if (!rep.ok) {
    detail = "double complex: " + rep.detail;
    return false;
  }
  return true;
}

bool check_cohomology_dims(std::string& detail) {
  {
    CEOptions opts;
    opts.p_max = 3;
    CEComplex cx = ce_complex(LieAlgebra::abelian(3), opts);
    auto h = cx.chain.cohomology_dims();
    for (int p = 0; p <= 3; ++p) {
      long want = binomial(3, p).num().get_si();
      if (h[p] != want) {
        detail = "abelian CE dims are not binomial at p=" + std::to_string(p);
        return false;
      }
    }
    if (!cx.chain.euler_characteristic_check() ||
        !cx.chain.rank_nullity_audit()) {
      detail = "Euler / rank-nullity audit failed on the abelian CE complex";
      return false;
    }
  }
  {
    CEOptions opts;
    opts.p_max = 3;
    CEComplex cx = ce_complex(LieAlgebra::sl2(), opts);
    auto h = cx.chain.cohomology_dims();
    if (h[0] != 1 || h[1] != 0 || h[2] != 0 || h[3] != 1) {
      detail = "sl2 dims differ from (1,0,0,1)";
      return false;
    }
    if (!cx.chain.euler_characteristic_check() ||
        !cx.chain.rank_nullity_audit()) {
      detail = "Euler / rank-nullity audit failed on the sl2 CE complex";
      return false;
    }
  }
  {
    Nerve circle({{1, 2}, {2, 3}, {1, 3}});
    auto coeffs = CechCoefficients::constant(circle, 1);
    CechComplex cx = cech_complex(circle, coeffs);
    auto h = cx.chain.cohomology_dims();
    if (h[0] != 1 || h[1] != 1) {
      detail = "circle nerve dims differ from (1,1)";
      return false;
    }
    if (!cx.chain.euler_characteristic_check() ||
        !cx.chain.rank_nullity_audit()) {
      detail = "Euler / rank-nullity audit failed on the circle nerve";
      return false;
    }
  }
  {
    Nerve simplex({{1, 2, 3}});
    auto coeffs = CechCoefficients::constant(simplex, 1);
    CechComplex cx = cech_complex(simplex, coeffs);
    auto h = cx.chain.cohomology_dims();
    if (h[0] != 1 || h[1] != 0 || h[2] != 0) {
      detail = "contractible nerve dims differ from (1,0,0)";
      return false;
    }
    if (!cx.chain.euler_characteristic_check() ||
        !cx.chain.rank_nullity_audit()) {
      detail = "Euler / rank-nullity audit failed on the simplex nerve";
      return false;
    }
  }
  return true;
}

bool check_model_axioms(std::string& detail) {
  const int d = 6;
  // T-derivative on the built-in family.
  for (int l = 1; l <= 2; ++l) {
    for (int s = 0; s <= d; s += 3) {
      if (!check_tg_property(correlation_cochain(d, l, s)).pass) {
        detail = "T-derivative fails on the correlation family";
        return false;
      }
    }
  }
  // K-grading of the kernel cochain.
  KgReport kg = check_kg_property(kernel_cochain(d), -1);
  if (!kg.pass || kg.weights_seen != std::set<int>{-1}) {
    detail = "K-grading fails on the kernel cochain";
    return false;
  }
  // Shuffle sum against the brute-force permutation oracle at l = 3.
  {
    Cochain f(3, 0, 2);
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coef(-2, 2);
    std::uniform_int_distribution<int> deg(0, 2);
    for (const auto& tuple : f.all_tuples()) {
      Polynomial num(3);
      Polynomial::Exponents e{deg(rng), deg(rng), deg(rng)};
      num.add_term(e, Rational(coef(rng)));
      f.set_value(tuple, RationalFunction::from_polynomial(num));
    }
    Cochain got = shuffle_sum(f, 1);
    // Oracle: full S3 with the order-preservation filter.
    Cochain want(3, 0, 2);
    std::vector<int> base{1, 2, 3};
    do {
      if (!(base[1] < base[2])) continue;
      int inv = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (base[i] > base[j]) ++inv;
      std::vector<int> tau(3);
      for (int i = 0; i < 3; ++i) tau[base[i] - 1] = i + 1;
      Cochain term(3, 0, 2);
      for (const auto& tuple : f.all_tuples()) {
        std::vector<int> permuted(3);
        for (int i = 1; i <= 3; ++i) permuted[i - 1] = tuple[tau[i - 1] - 1];
        const RationalFunction& v = f.value(permuted);
        if (v.is_zero()) continue;
        term.set_value(tuple,
                       v.permute(tau) * Rational(inv % 2 == 0 ? 1 : -1));
      }
      want = want + term;
    } while (std::next_permutation(base.begin(), base.end()));
    if (!(got == want)) {
      detail = "shuffle sum differs from the S3 oracle";
      return false;
    }
  }
  // Pole-bound audit.
  if (!check_pole_bounds(correlation_cochain(d, 2, 1)).pass) {
    detail = "pole bounds fail on the polynomial family";
    return false;
  }
  Cochain bad(2, 0, 2);
  bad.set_value({0, 0}, RationalFunction::pole(2, 1, 2, 3));
  bad.set_beta(0, 0, 2);
  if (check_pole_bounds(bad).pass) {
    detail = "pole-bound audit missed a violation";
    return false;
  }
  // Zeta independence of fusion.
  ModelAlgebra model;
  model.degree_bound = d;
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial g1(1), g2(1);
    for (int t = 0; t <= 3; ++t) {
      g1.add_term({t}, Rational(coef(rng)));
      g2.add_term({t}, Rational(coef(rng)));
    }
    if (g1.is_zero() || g2.is_zero()) continue;
    FusionResult a = fusion_expand(model, g1, g2, Rational(1, 4), d);
    FusionResult b = fusion_expand(model, g1, g2, Rational(2, 7), d);
    if (!(a.recombined == b.recombined)) {
      detail = "fusion depends on zeta";
      return false;
    }
  }
  return true;
}

bool check_determinism(std::string& detail) {
  const char* manifests[] = {"eisenstein", "pk",      "cmatrix", "necklace",
                             "cech",       "d2check", "verify",  "amatrix"};
  for (const char* m : manifests) {
    std::string path = std::string("manifests/") + m + ".json";
    int code = 0;
    std::string sub;
    {
      std::string content = run_shell(
          "cat " + std::string(MEROC_FIXTURES) + "/" + path, &code);
      auto pos = content.find("\"subcommand\"");
      if (pos == std::string::npos) {
        detail = "manifest " + path + " unreadable";
        return false;
      }
      auto start = content.find('"', content.find(':', pos)) + 1;
      sub = content.substr(start, content.find('"', start) - start);
    }
    std::string cmd = "cd " + std::string(MEROC_FIXTURES) + " && " +
                      std::string(MEROC_CLI_PATH) + " " + sub + " --manifest " +
                      path + " 2>/dev/null";
    int code_a = 0, code_b = 0;
    std::string a = run_shell(cmd, &code_a);
    std::string b = run_shell(cmd, &code_b);
    if (code_a != 0 || code_b != 0 || a.empty() || a != b) {
      detail = "non-identical output for manifest " + path;
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "Eisenstein constant terms = -B_k/k! (even k <= 12)", 1.0,
            check_eisenstein_bernoulli);
  criterion(2, "derivative chain P2 = -dP1/dz, P1 = -dP0/dz (z 12, q 20)", 5.0,
            check_derivative_chain);
  criterion(3, "expansion identities through z,w order 8, q order 12, k <= 5",
            30.0, check_expansion_identities);
  criterion(4, "C/D symmetry for k,l <= 6", 10.0, check_cd_symmetry);
  criterion(5, "numeric p2 cross-check at 20 random points (<= 1e-8)", 5.0,
            check_numeric_cross);
  criterion(6, "necklace enumeration = transfer matrix (m <= 6, cutoff <= 5)",
            60.0, check_necklace_equivalence);
  criterion(7, "nilpotency: Cech, CE (with PBW window), double complex", 300.0,
            check_nilpotency_suite);
  criterion(8, "cohomology dimensions: abelian, sl2, circle, simplex", 30.0,
            check_cohomology_dims);
  criterion(9, "mero-model axioms on the polynomial model at D = 6", 60.0,
            check_model_axioms);
  criterion(10, "byte-identical CLI output for every fixture manifest", 60.0,
            check_determinism);
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
