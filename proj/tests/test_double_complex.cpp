#include <doctest.h>

#include "meroc/double_complex.hpp"

using namespace meroc;

namespace {

Polynomial phi_value(int ring_vars, int r, const std::vector<int>& tuple) {
  Polynomial acc = Polynomial::monomial(
      ring_vars, [&] {
        Polynomial::Exponents e(ring_vars, 0);
        e[0] = r;
        return e;
      }(),
      Rational(1));
  for (size_t i = 0; i < tuple.size(); ++i) {
    Polynomial f = Polynomial::variable(ring_vars, 0) +
                   Polynomial::variable(ring_vars, static_cast<int>(i) + 1);
    acc *= f.pow(static_cast<unsigned>(tuple[i]));
  }
  return acc;
}

}  // namespace

TEST_CASE("model axiom gate accepts the polynomial model") {
  ModelAlgebra m;
  m.degree_bound = 4;
  CHECK_NOTHROW(verify_model_axioms(m));
}

TEST_CASE("coboundary of the one-point family matches a direct expansion") {
  // For l = 1 the three terms are: leading insertion, one fusion, trailing
  // insertion.  Writing them out by hand for Phi_r gives
  //   (t+y1)^{a1} t^r (t+y2)^{a2} - t^r (t+y1)^{a1}(t+y2)^{a2}
  //   + (t+y2)^{a2} t^r (t+y1)^{a1}  =  Phi_r^{(2)}(a1, a2),
  // so D^1 is the identity matrix on the enumerated basis.
  ModelAlgebra m;
  m.degree_bound = 3;
  DoubleComplexOptions opts;
  opts.degree_bound = 3;
  opts.l_max = 1;
  opts.k_max = 1;
  MatQ d1 = assemble_coboundary(m, 1, opts);
  for (long r = 0; r < d1.rows(); ++r)
    for (long c = 0; c < d1.cols(); ++c)
      CHECK(d1(r, c) == Rational(r == c ? 1 : 0));

  // Independent oracle on values: apply the three-term formula directly.
  const int ring_vars = 4;  // t, y1, y2, and one spare (unused)
  for (int r = 0; r <= 3; ++r) {
    for (int a1 = 0; a1 <= 3; ++a1) {
      for (int a2 = 0; a2 <= 3; ++a2) {
        Rational zeta(1, 3);
        Polynomial t = Polynomial::variable(ring_vars, 0);
        Polynomial y1 = Polynomial::variable(ring_vars, 1);
        Polynomial y2 = Polynomial::variable(ring_vars, 2);
        Polynomial zc = Polynomial::constant(ring_vars, zeta);
        auto pw = [&](const Polynomial& base, int e) { return base.pow(e); };
        Polynomial tr = pw(t, r);
        Polynomial term1 = pw(t + y1, a1) * tr * pw(t + y2, a2);
        Polynomial fused =
            pw(t + y1 - zc, a1) * pw(t + y2 - zc, a2);  // element at zeta
        Polynomial term2 = tr * fused.substitute(0, t + zc);
        Polynomial term3 = pw(t + y2, a2) * tr * pw(t + y1, a1);
        Polynomial direct = term1 - term2 + term3;
        CHECK(direct == phi_value(ring_vars, r, {a1, a2}));
      }
    }
  }
}

TEST_CASE("assembled coboundaries alternate between identity and zero") {
  ModelAlgebra m;
  m.degree_bound = 3;
  DoubleComplexOptions opts;
  opts.degree_bound = 3;
  opts.l_max = 3;
  opts.k_max = 1;
  for (int l = 0; l <= 3; ++l) {
    MatQ d = assemble_coboundary(m, l, opts);
    for (long r = 0; r < d.rows(); ++r)
      for (long c = 0; c < d.cols(); ++c) {
        Rational want(l % 2 == 1 && r == c ? 1 : 0);
        CHECK(d(r, c) == want);
      }
  }
}

TEST_CASE("zeta independence of the assembled matrices") {
  ModelAlgebra m;
  m.degree_bound = 3;
  DoubleComplexOptions a;
  a.degree_bound = 3;
  a.l_max = 2;
  a.k_max = 2;
  DoubleComplexOptions b = a;
  b.zetas = {Rational(1, 7), Rational(2, 9)};
  for (int l = 0; l <= 2; ++l) {
    MatQ da = assemble_coboundary(m, l, a);
    MatQ db = assemble_coboundary(m, l, b);
    CHECK(is_zero_matrix(MatQ(da - db)));
  }
  DoubleComplexOptions bad = a;
  bad.zetas = {Rational(1, 7), Rational(1, 7)};
  CHECK_THROWS_AS(assemble_coboundary(m, 2, bad), ValidationError);
}

TEST_CASE("double complex: nilpotency and filtration shape") {
  ModelAlgebra m;
  m.degree_bound = 4;
  DoubleComplexOptions opts;
  opts.degree_bound = 4;
  opts.l_max = 2;
  opts.k_max = 3;
  DoubleComplexResult r = build_double_complex(m, opts);
  CHECK(r.cell_dim == 5);
  CHECK(r.complex.verify_nilpotency().ok);
  // Maps exist for k >= 1 only: the k = 0 row terminates.
  CHECK(!r.complex.has_map(1, 0));
  CHECK(r.complex.has_map(1, 1));

  auto h = r.complex.cohomology_dims();
  // Interior cells: cohomology concentrated at l = 0 (the constants).
  for (int k = 0; k < 3; ++k) CHECK(h[{0, k}] == 5);
  for (int k = 1; k < 3; ++k) {
    CHECK(h[{1, k}] == 0);
    CHECK(h[{2, k}] == 0);
  }
}

TEST_CASE("W_V override hook feeds the middle terms only") {
  ModelAlgebra m;
  m.degree_bound = 2;
  DoubleComplexOptions opts;
  opts.degree_bound = 2;
  opts.l_max = 1;
  opts.k_max = 1;
  opts.w_v_hook = [](const Polynomial& p) { return p * Rational(2); };
  // With the fusion doubled (two insertions, factor 4), D^1 on Phi_r is
  // (1 - 4 + 1) = -2 times the identity.
  MatQ d = assemble_coboundary(m, 1, opts);
  for (long r = 0; r < d.rows(); ++r)
    for (long c = 0; c < d.cols(); ++c)
      CHECK(d(r, c) == Rational(r == c ? -2 : 0));
}
