#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "meroc/eigen_support.hpp"
#include "meroc/rational_function.hpp"

namespace meroc {

// Desk-scale model of the graded space G: polynomials in t of degree <= D,
// with grading operator K = t d/dt and translation operator T = d/dt.
struct ModelAlgebra {
  int degree_bound = 6;

  int dim() const { return degree_bound + 1; }
  MatQ k_matrix() const;
  MatQ t_matrix() const;
  // K diagonal with the degrees, T strictly lower-triangular shift,
  // [K, T] = -T; all exact.
  void validate() const;
};

// Built-in commutative field insertion: W_g(z).h = g(t+z) h, truncated to
// the degree bound.  `target` lives in a ring whose variable 0 is t;
// `g` is univariate in t; z_var names the insertion variable inside the
// target ring.
Polynomial apply_insertion(const ModelAlgebra& model, const Polynomial& g,
                           int z_var, const Polynomial& target);

// Multilinear cochain on l-tuples of basis elements t^0..t^D with values in
// rational functions of z_1..z_l.  Pole bounds beta are keyed by the basis
// degrees of the pair.
class Cochain {
 public:
  Cochain(int l, int k, int degree_bound);

  int l() const { return l_; }
  int k() const { return k_; }
  int degree_bound() const { return degree_bound_; }

  void set_value(const std::vector<int>& tuple, RationalFunction v);
  const RationalFunction& value(const std::vector<int>& tuple) const;

  void set_beta(int deg_a, int deg_b, int bound);
  int beta(int deg_a, int deg_b) const;
  const std::map<std::pair<int, int>, int>& beta_table() const { return beta_; }
  int beta_default() const { return beta_default_; }
  void set_beta_default(int b) { beta_default_ = b; }

  Cochain operator+(const Cochain& o) const;
  Cochain operator*(const Rational& s) const;
  bool operator==(const Cochain& o) const;

  // Iterate all tuples in {0..D}^l.
  std::vector<std::vector<int>> all_tuples() const;

 private:
  int l_;
  int k_;
  int degree_bound_;
  int beta_default_;
  std::map<std::vector<int>, RationalFunction> values_;
  std::map<std::pair<int, int>, int> beta_;
  RationalFunction zero_;
};

struct CheckReport {
  bool pass = true;
  std::vector<std::string> violations;
};

// Eq-style T-derivative property: d/dz_i F(..g_i..) = F(..T g_i..) for all
// basis tuples and slots, plus the summed version.
CheckReport check_tg_property(const Cochain& f);

struct KgReport {
  bool pass = true;
  std::set<int> weights_seen;
  std::vector<std::string> violations;
};

// Degree bookkeeping form of the scaling covariance: every nonzero value is
// homogeneous and (z-degree of value) + sum deg(g_i) equals w.
KgReport check_kg_property(const Cochain& f, int w);

// Signed sum over the inverse (p, l-p)-shuffles acting by simultaneous
// permutation of slots and variables.
Cochain shuffle_sum(const Cochain& f, int p);

// Number of (p, m-p)-shuffles; |J_{m,p}| = binomial(m, p).
long shuffle_count(int m, int p);

// Actual pole orders against the beta table, pairs of actual points only.
CheckReport check_pole_bounds(const Cochain& f);

// Two-point fusion in the polynomial model: projections by t-degree of
//   W(g1, z1 - zeta) W(g2, z2 - zeta) . vacuum,
// exact and finite.  components[r] is the coefficient of t^r, a polynomial
// in (z1, z2); recombined re-inserts at zeta (substitutes t -> t + zeta)
// and is independent of zeta.
struct FusionResult {
  std::vector<Polynomial> components;  // nvars = 2: (z1, z2)
  Polynomial recombined;               // nvars = 3: (t, z1, z2)
};
FusionResult fusion_expand(const ModelAlgebra& model, const Polynomial& g1,
                           const Polynomial& g2, const Rational& zeta,
                           int cutoff);

// F_s(g_1..g_l; z) = coefficient of t^s in prod_i g_i(t+z_i): the built-in
// admissible family; values are polynomials.
Cochain correlation_cochain(int degree_bound, int l, int s);

// F(t^a; z) = z^{-a-1}: the geometric evaluation kernel, homogeneous of
// weight -1.
Cochain kernel_cochain(int degree_bound);

}  // namespace meroc
