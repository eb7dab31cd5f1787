#include "meroc/chain_complex.hpp"

#include <sstream>

#include "meroc/errors.hpp"

namespace meroc {

void ChainComplex::set_space(int degree, long dim) {
  if (dim < 0) throw ValidationError("negative dimension");
  dims_[degree] = dim;
}

void ChainComplex::set_differential(int degree, MatQ m) {
  long src = dim(degree);
  long dst = dim(degree + dir_);
  if (m.cols() != src || m.rows() != dst)
    throw ValidationError("differential shape mismatch at degree " +
                          std::to_string(degree));
  diff_[degree] = std::move(m);
}

long ChainComplex::dim(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

NilpotencyReport ChainComplex::verify_nilpotency() const {
  NilpotencyReport rep;
  for (const auto& [d, m] : diff_) {
    auto next = diff_.find(d + dir_);
    if (next == diff_.end()) continue;
    MatQ comp = next->second * m;
    if (!is_zero_matrix(comp)) {
      std::ostringstream os;
      os << "d² != 0 at degree " << d << ", basis vector "
         << first_nonzero_column(comp);
      rep.ok = false;
      rep.detail = os.str();
      return rep;
    }
  }
  return rep;
}

std::map<int, long> ChainComplex::cohomology_dims() const {
  std::map<int, long> h;
  for (const auto& [d, n] : dims_) {
    long rank_out = 0;
    long rank_in = 0;
    auto out = diff_.find(d);
    if (out != diff_.end()) rank_out = rank_exact(out->second);
    auto in = diff_.find(d - dir_);
    if (in != diff_.end()) rank_in = rank_exact(in->second);
    h[d] = n - rank_out - rank_in;
  }
  return h;
}

bool ChainComplex::euler_characteristic_check() const {
  long lhs = 0;
  for (const auto& [d, n] : dims_) lhs += (d % 2 == 0 ? n : -n);
  long rhs = 0;
  for (const auto& [d, n] : cohomology_dims()) rhs += (d % 2 == 0 ? n : -n);
  return lhs == rhs;
}

bool ChainComplex::rank_nullity_audit() const {
  for (const auto& [d, m] : diff_) {
    long r = rank_exact(m);
    if (kernel_dim(m) + r != m.cols()) return false;
  }
  return true;
}

void BigradedComplex::set_space(int l, int k, long dim) {
  if (dim < 0) throw ValidationError("negative dimension");
  dims_[{l, k}] = dim;
}

void BigradedComplex::set_map(int l, int k, MatQ m) {
  if (k < 1)
    throw ValidationError("the k = 0 row terminates; no map out of it");
  long src = dim(l, k);
  long dst = dim(l + 1, k - 1);
  if (m.cols() != src || m.rows() != dst)
    throw ValidationError("double complex map shape mismatch");
  d_[{l, k}] = std::move(m);
}

long BigradedComplex::dim(int l, int k) const {
  auto it = dims_.find({l, k});
  return it == dims_.end() ? 0 : it->second;
}

NilpotencyReport BigradedComplex::verify_nilpotency() const {
  NilpotencyReport rep;
  for (const auto& [cell, m] : d_) {
    auto next = d_.find({cell.first + 1, cell.second - 1});
    if (next == d_.end()) continue;
    MatQ comp = next->second * m;
    if (!is_zero_matrix(comp)) {
      std::ostringstream os;
      os << "D² != 0 at cell (" << cell.first << "," << cell.second
         << "), basis vector " << first_nonzero_column(comp);
      rep.ok = false;
      rep.detail = os.str();
      return rep;
    }
  }
  return rep;
}

std::map<BigradedComplex::Cell, long> BigradedComplex::cohomology_dims() const {
  std::map<Cell, long> h;
  for (const auto& [cell, n] : dims_) {
    long rank_out = 0;
    long rank_in = 0;
    auto out = d_.find(cell);
    if (out != d_.end()) rank_out = rank_exact(out->second);
    auto in = d_.find({cell.first - 1, cell.second + 1});
    if (in != d_.end()) rank_in = rank_exact(in->second);
    h[cell] = n - rank_out - rank_in;
  }
  return h;
}

}  // namespace meroc
