#pragma once

#include <optional>
#include <set>
#include <vector>

#include "meroc/chain_complex.hpp"

namespace meroc {

// Finite-dimensional representation given by action matrices rho(e_i).
struct LieModule {
  int dim = 0;
  std::vector<MatQ> action;
};

// Lie algebra over Q by structure constants: [e_i, e_j] = sum_k c[i][j][k] e_k.
class LieAlgebra {
 public:
  explicit LieAlgebra(int dim);

  int dim() const { return dim_; }

  // Sets [e_i, e_j]; the opposite bracket is filled in by antisymmetry.
  void set_bracket(int i, int j, const std::vector<Rational>& coeffs);
  const std::vector<Rational>& bracket(int i, int j) const;

  void set_module(LieModule m);
  const std::optional<LieModule>& module() const { return module_; }

  // Antisymmetry, Jacobi, and (when a module is attached) the bracket
  // compatibility rho([x,y]) = rho(x)rho(y) - rho(y)rho(x); all exact.
  void validate() const;

  static LieAlgebra abelian(int n);
  static LieAlgebra heisenberg();
  static LieAlgebra sl2();

 private:
  int dim_;
  std::vector<std::vector<std::vector<Rational>>> c_;
  std::optional<LieModule> module_;
};

// Coefficient choice for the Chevalley-Eilenberg chain complex:
//   pbw_cutoff == 0 and no module: trivial coefficients Q,
//   use_module: the attached module,
//   pbw_cutoff >= 1: U(a) truncated at PBW filtration degree `pbw_cutoff`.
struct CEOptions {
  int p_max = 3;
  int pbw_cutoff = 0;
  bool use_module = false;
};

struct CEComplex {
  ChainComplex chain{-1};  // homological: d_p : W_p -> W_{p-1}
  // Degrees p whose differential never left the PBW window; d^2 = 0 is
  // asserted only where both factors are closed.
  std::set<int> closed_degrees;

  NilpotencyReport verify_nilpotency_windowed() const;
};

CEComplex ce_complex(const LieAlgebra& g, const CEOptions& opts);

}  // namespace meroc
