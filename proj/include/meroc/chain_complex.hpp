#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "meroc/linalg.hpp"

namespace meroc {

struct NilpotencyReport {
  bool ok = true;
  std::string detail;  // offending degree and basis vector when !ok
};

// Singly graded complex of finite-dimensional Q-spaces.  The differential
// at degree d maps C_d to C_{d + direction}; matrices act on column
// vectors, so they have shape dim(target) x dim(source).
class ChainComplex {
 public:
  explicit ChainComplex(int direction = +1) : dir_(direction) {}

  int direction() const { return dir_; }

  void set_space(int degree, long dim);
  void set_differential(int degree, MatQ m);

  long dim(int degree) const;
  bool has_differential(int degree) const { return diff_.count(degree) > 0; }
  const MatQ& differential(int degree) const { return diff_.at(degree); }
  const std::map<int, long>& spaces() const { return dims_; }
  const std::map<int, MatQ>& differentials() const { return diff_; }

  // Exact check that consecutive differentials compose to zero; reports the
  // first offending degree and basis vector otherwise.
  NilpotencyReport verify_nilpotency() const;

  // dim H at every stored degree: dim ker(outgoing) - rank(incoming).
  // Requires verify_nilpotency() to have passed.
  std::map<int, long> cohomology_dims() const;

  // sum (-1)^d dim C_d == sum (-1)^d dim H_d, exactly.
  bool euler_characteristic_check() const;

  // dim ker + rank == dim, per stored differential.
  bool rank_nullity_audit() const;

 private:
  int dir_;
  std::map<int, long> dims_;
  std::map<int, MatQ> diff_;
};

// Bigraded double complex with maps D^l_k : C^l_k -> C^{l+1}_{k-1}.
// The k = 0 row terminates: no map leaves it.
class BigradedComplex {
 public:
  using Cell = std::pair<int, int>;  // (l, k)

  void set_space(int l, int k, long dim);
  void set_map(int l, int k, MatQ m);  // from (l,k) to (l+1,k-1)

  long dim(int l, int k) const;
  bool has_map(int l, int k) const { return d_.count({l, k}) > 0; }
  const MatQ& map(int l, int k) const { return d_.at({l, k}); }
  const std::map<Cell, long>& spaces() const { return dims_; }
  const std::map<Cell, MatQ>& maps() const { return d_; }

  NilpotencyReport verify_nilpotency() const;

  // dim H^l_k = dim ker D^l_k - rank D^{l-1}_{k+1}.
  std::map<Cell, long> cohomology_dims() const;

 private:
  int dir_unused_ = 0;
  std::map<Cell, long> dims_;
  std::map<Cell, MatQ> d_;
};

}  // namespace meroc
