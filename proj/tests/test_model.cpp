#include <doctest.h>

#include <functional>
#include <random>

#include "meroc/linalg.hpp"
#include "meroc/model.hpp"

using namespace meroc;

namespace {

Polynomial t_power(int a) {
  return Polynomial::monomial(1, {a}, Rational(1));
}

Polynomial rand_tpoly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> coef(-3, 3);
  Polynomial p(1);
  for (int t = 0; t <= max_deg; ++t) p.add_term({deg(rng)}, Rational(coef(rng)));
  return p;
}

// Cochain permutation helper for the complementary-shuffle identity.
Cochain act(const Cochain& f, const std::vector<int>& pi) {
  Cochain out(f.l(), f.k(), f.degree_bound());
  for (const auto& tuple : f.all_tuples()) {
    std::vector<int> permuted(f.l());
    for (int i = 1; i <= f.l(); ++i) permuted[i - 1] = tuple[pi[i - 1] - 1];
    const RationalFunction& v = f.value(permuted);
    if (v.is_zero()) continue;
    std::vector<int> var_perm(f.l());
    for (int i = 1; i <= f.l(); ++i) var_perm[i - 1] = pi[i - 1];
    out.set_value(tuple, v.permute(var_perm));
  }
  return out;
}

Cochain rand_cochain(std::mt19937& rng, int l, int degree_bound) {
  std::uniform_int_distribution<long> coef(-2, 2);
  std::uniform_int_distribution<int> deg(0, 2);
  Cochain f(l, 0, degree_bound);
  for (const auto& tuple : f.all_tuples()) {
    Polynomial num(l);
    Polynomial::Exponents e(l);
    for (int i = 0; i < l; ++i) e[i] = deg(rng);
    num.add_term(e, Rational(coef(rng)));
    RationalFunction v = RationalFunction::from_polynomial(num);
    if (deg(rng) == 0 && l >= 2)
      v = v * RationalFunction::pole(l, 1, 2, 1);
    f.set_value(tuple, v);
  }
  return f;
}

}  // namespace

TEST_CASE("model algebra operators") {
  ModelAlgebra m;
  m.degree_bound = 6;
  m.validate();
  MatQ k = m.k_matrix();
  MatQ t = m.t_matrix();
  CHECK(k(3, 3) == Rational(3));
  CHECK(t(2, 3) == Rational(3));  // T t^3 = 3 t^2
  CHECK(is_zero_matrix(MatQ(k * t - t * k + t)));
}

TEST_CASE("insertion at z = 0 on the vacuum returns the element") {
  ModelAlgebra m;
  m.degree_bound = 5;
  std::mt19937 rng(88);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial g = rand_tpoly(rng, 4);
    Polynomial vacuum = Polynomial::constant(2, Rational(1));
    Polynomial inserted = apply_insertion(m, g, 1, vacuum);
    Polynomial at_zero = inserted.substitute_value(1, Rational(0));
    CHECK(at_zero == g.embed_vars(2, {0}));
  }
}

TEST_CASE("field insertions commute in the commutative model") {
  ModelAlgebra m;
  m.degree_bound = 6;
  // Ring (t, z, w); target basis vectors t^b.
  for (int a = 0; a <= m.degree_bound; ++a) {
    for (int b = 0; b <= m.degree_bound; ++b) {
      for (int c = 0; c <= 2; ++c) {
        Polynomial target = Polynomial::monomial(3, {c, 0, 0}, Rational(1));
        Polynomial one_way =
            apply_insertion(m, t_power(b), 2,
                            apply_insertion(m, t_power(a), 1, target));
        Polynomial other_way =
            apply_insertion(m, t_power(a), 1,
                            apply_insertion(m, t_power(b), 2, target));
        CHECK(one_way == other_way);
      }
    }
  }
}

TEST_CASE("T-derivative property holds for the correlation family") {
  for (int l = 1; l <= 2; ++l) {
    for (int s = 0; s <= 3; ++s) {
      Cochain f = correlation_cochain(4, l, s);
      CheckReport rep = check_tg_property(f);
      CHECK(rep.pass);
      CHECK(rep.violations.empty());
    }
  }
}

TEST_CASE("T-derivative property fails for a constant-in-z cochain") {
  Cochain f(1, 0, 3);
  for (int a = 0; a <= 3; ++a)
    f.set_value({a}, RationalFunction::constant(1, Rational(1)));
  CheckReport rep = check_tg_property(f);
  CHECK(!rep.pass);
  // The violating tuples are reported.
  CHECK(!rep.violations.empty());
  CHECK(rep.violations.front().find("t^1") != std::string::npos);

  Cochain zero(1, 0, 3);
  CHECK(check_tg_property(zero).pass);
}

TEST_CASE("K-grading: geometric kernel cochain has weight -1") {
  Cochain f = kernel_cochain(5);
  KgReport rep = check_kg_property(f, -1);
  CHECK(rep.pass);
  CHECK(rep.weights_seen == std::set<int>{-1});

  // A sum of two different weights fails and reports both.
  Cochain g(1, 0, 3);
  g.set_value({0}, RationalFunction::pole(1, 0, 1, 1));   // weight -1
  g.set_value({1}, RationalFunction::pole(1, 0, 1, 1));   // weight 0
  KgReport bad = check_kg_property(g, -1);
  CHECK(!bad.pass);
  CHECK(bad.weights_seen == std::set<int>{-1, 0});

  Cochain zero(2, 0, 3);
  for (int w = -2; w <= 2; ++w) CHECK(check_kg_property(zero, w).pass);
}

TEST_CASE("shuffle counts match binomials") {
  for (int l = 2; l <= 6; ++l)
    for (int p = 1; p < l; ++p) {
      long binom = binomial(l, p).num().get_si();
      CHECK(shuffle_count(l, p) == binom);
    }
}

TEST_CASE("shuffle sum annihilates symmetric cochains at l = 2") {
  Cochain f = correlation_cochain(4, 2, 2);  // symmetric in its slots
  Cochain s = shuffle_sum(f, 1);
  Cochain zero(2, 0, 4);
  CHECK(s == zero);
}

TEST_CASE("shuffle sum equals the brute-force S3 oracle at l = 3") {
  std::mt19937 rng(777);
  Cochain f = rand_cochain(rng, 3, 2);
  Cochain got = shuffle_sum(f, 1);

  // Oracle: enumerate all 6 permutations, filter order preservation of the
  // blocks {1} and {2,3} on the shuffle side, act with inverses.
  std::vector<std::vector<int>> perms;
  std::vector<int> base{1, 2, 3};
  std::sort(base.begin(), base.end());
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  Cochain want(3, 0, 2);
  for (const auto& sigma : perms) {
    if (!(sigma[1] < sigma[2])) continue;  // sigma(2) < sigma(3); p = 1
    int inv = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (sigma[i] > sigma[j]) ++inv;
    std::vector<int> tau(3);
    for (int i = 0; i < 3; ++i) tau[sigma[i] - 1] = i + 1;
    want = want + act(f, tau) * Rational(inv % 2 == 0 ? 1 : -1);
  }
  CHECK(got == want);
}

TEST_CASE("complementary shuffles agree up to the block swap and sign") {
  std::mt19937 rng(4040);
  for (int l = 3; l <= 4; ++l) {
    Cochain f = rand_cochain(rng, l, 1);
    for (int p = 1; p < l; ++p) {
      Cochain lhs = shuffle_sum(f, l - p);
      // w sends position i to i + p cyclically by blocks.
      std::vector<int> w(l);
      for (int i = 1; i <= l - p; ++i) w[i - 1] = i + p;
      for (int i = l - p + 1; i <= l; ++i) w[i - 1] = i - (l - p);
      int sgn = (p * (l - p)) % 2 == 0 ? 1 : -1;
      std::vector<int> w_inv(l);
      for (int i = 1; i <= l; ++i) w_inv[w[i - 1] - 1] = i;
      Cochain rhs = act(shuffle_sum(f, p), w_inv) * Rational(sgn);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("pole bound auditing") {
  Cochain poly = correlation_cochain(3, 2, 1);
  CHECK(check_pole_bounds(poly).pass);

  Cochain f(2, 0, 3);
  f.set_value({1, 1}, RationalFunction::pole(2, 1, 2, 3));
  f.set_beta(1, 1, 2);
  CheckReport rep = check_pole_bounds(f);
  CHECK(!rep.pass);
  CHECK(rep.violations.size() == 1);
  CHECK(rep.violations.front().find("(1,2)") != std::string::npos);

  // The built-in pairing family passes with the default beta = D + 1.
  Cochain pairing = correlation_cochain(4, 2, 0);
  CHECK(pairing.beta(2, 3) == 5);
  CHECK(check_pole_bounds(pairing).pass);
}

TEST_CASE("fusion: vacuum insertions are parameter independent") {
  ModelAlgebra m;
  m.degree_bound = 6;
  FusionResult r = fusion_expand(m, t_power(0), t_power(0), Rational(1, 3), 6);
  CHECK(r.components.size() == 1);
  CHECK(r.components[0] == Polynomial::constant(2, Rational(1)));
  CHECK(r.recombined == Polynomial::constant(3, Rational(1)));
}

TEST_CASE("fusion of t with the vacuum recombines without zeta") {
  ModelAlgebra m;
  m.degree_bound = 6;
  FusionResult r = fusion_expand(m, t_power(1), t_power(0), Rational(1, 3), 6);
  // Components: degree 0 carries (z1 - zeta), degree 1 carries 1.
  Polynomial z1 = Polynomial::variable(2, 0);
  CHECK(r.components.size() == 2);
  CHECK(r.components[0] == z1 - Polynomial::constant(2, Rational(1, 3)));
  CHECK(r.components[1] == Polynomial::constant(2, Rational(1)));
  // Recombination is t + z1: the zeta dependence cancels.
  Polynomial want = Polynomial::variable(3, 0) + Polynomial::variable(3, 1);
  CHECK(r.recombined == want);
}

TEST_CASE("fusion degree additivity, cutoff, and zeta independence") {
  ModelAlgebra m;
  m.degree_bound = 6;
  std::mt19937 rng(31415);
  for (int trial = 0; trial < 25; ++trial) {
    Polynomial g1 = rand_tpoly(rng, 3);
    Polynomial g2 = rand_tpoly(rng, 3);
    if (g1.is_zero() || g2.is_zero()) continue;
    FusionResult a = fusion_expand(m, g1, g2, Rational(1, 7), 6);
    FusionResult b = fusion_expand(m, g1, g2, Rational(3, 5), 6);
    CHECK(a.recombined == b.recombined);
    CHECK(a.recombined.degree_in(0) == g1.degree_in(0) + g2.degree_in(0));
  }
  CHECK_THROWS_AS(fusion_expand(m, t_power(4), t_power(4), Rational(1, 2), 6),
                  TruncationError);
}
