#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "meroc/chain_complex.hpp"
#include "meroc/model.hpp"

namespace meroc {

// G-valued cochain with closed-form multilinear evaluation: the value is a
// polynomial in (t, y_1..y_m) given arbitrary slot elements (polynomials
// over the same ring, univariate content in t allowed to mix with the y's)
// and insertion points that are either output variables or rational
// constants.  Closed forms let the coboundary query slots of arbitrary
// degree without a table bound.
class GCochain {
 public:
  struct InsertionPoint {
    bool is_var = true;
    int var = 1;        // output variable index (poly var index), 1-based
    Rational c = Rational(0);
    static InsertionPoint at_var(int v) { return {true, v, Rational(0)}; }
    static InsertionPoint at_const(const Rational& r) { return {false, 0, r}; }
  };

  virtual ~GCochain() = default;
  virtual int arity() const = 0;
  virtual Polynomial value(const std::vector<Polynomial>& elems,
                           const std::vector<InsertionPoint>& points,
                           int out_vars) const = 0;
};

// The admissible family of the polynomial model: multiplier t^r times the
// product of the inserted elements,
//   Phi_r(g_1..g_l; z) = t^r prod_i g_i(t + z_i).
class CorrelationGCochain : public GCochain {
 public:
  CorrelationGCochain(int l, int r) : l_(l), r_(r) {}
  int arity() const override { return l_; }
  int multiplier_degree() const { return r_; }
  Polynomial value(const std::vector<Polynomial>& elems,
                   const std::vector<InsertionPoint>& points,
                   int out_vars) const override;

 private:
  int l_;
  int r_;
};

struct DoubleComplexOptions {
  int degree_bound = 4;
  int l_max = 2;
  int k_max = 3;
  // Middle-term parameters for D^l; entry i-1 is zeta_i.  Empty selects the
  // default zeta_i = i/(l+2).
  std::vector<Rational> zetas;
  // Override hooks for the two insertion symbols; identity by default.
  std::function<Polynomial(const Polynomial&)> w_w_hook;
  std::function<Polynomial(const Polynomial&)> w_v_hook;
};

// Rejects a model whose axiom suite fails (grading/translation commutation,
// T-derivative property of the built-in family, zeta-independent fusion).
void verify_model_axioms(const ModelAlgebra& model);

struct DoubleComplexResult {
  BigradedComplex complex;
  long cell_dim = 0;  // every enumerated cell has the same basis size
};

// Assembles the bigraded complex with maps D^l_k : C^l_k -> C^{l+1}_{k-1}
// from the three-term coboundary: leading insertion at slot 1, alternating
// two-point fusions at the zeta_i, trailing insertion at the last slot.
DoubleComplexResult build_double_complex(const ModelAlgebra& model,
                                         const DoubleComplexOptions& opts);

// Matrix of D^l alone (shared across k >= 1).
MatQ assemble_coboundary(const ModelAlgebra& model, int l,
                         const DoubleComplexOptions& opts);

}  // namespace meroc
