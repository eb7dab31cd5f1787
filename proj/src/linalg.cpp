#include "meroc/linalg.hpp"

#include "meroc/errors.hpp"

namespace meroc {

std::vector<std::vector<mpz_class>> to_integer_rows(const MatQ& m) {
  std::vector<std::vector<mpz_class>> out(m.rows(),
                                          std::vector<mpz_class>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out[i][j] = m(i, j).num() * (l / m(i, j).den());
  }
  return out;
}

long bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  const long rows = static_cast<long>(a.size());
  const long cols = rows == 0 ? 0 : static_cast<long>(a[0].size());
  long rank = 0;
  mpz_class prev(1);
  for (long c = 0; c < cols && rank < rows; ++c) {
    long piv = -1;
    for (long i = rank; i < rows; ++i) {
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (long i = rank + 1; i < rows; ++i) {
      for (long j = c + 1; j < cols; ++j) {
        mpz_class t = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
        if (mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()) == 0)
          throw ConsistencyError("Bareiss exact division failed");
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

long rank_exact(const MatQ& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss_rank(to_integer_rows(m));
}

long kernel_dim(const MatQ& m) { return m.cols() - rank_exact(m); }

bool is_zero_matrix(const MatQ& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

long first_nonzero_column(const MatQ& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return j;
  return -1;
}

namespace {

bool snf_find_pivot(const std::vector<std::vector<mpz_class>>& a, long t,
                    long& pi, long& pj) {
  const long rows = static_cast<long>(a.size());
  const long cols = static_cast<long>(a[0].size());
  bool found = false;
  mpz_class best;
  for (long i = t; i < rows; ++i) {
    for (long j = t; j < cols; ++j) {
      if (a[i][j] == 0) continue;
      mpz_class v = ::abs(a[i][j]);
      if (!found || v < best) {
        best = v;
        pi = i;
        pj = j;
        found = true;
      }
    }
  }
  return found;
}

}  // namespace

std::vector<mpz_class> smith_invariants(std::vector<std::vector<mpz_class>> a) {
  std::vector<mpz_class> inv;
  if (a.empty() || a[0].empty()) return inv;
  const long rows = static_cast<long>(a.size());
  const long cols = static_cast<long>(a[0].size());
  const long steps = std::min(rows, cols);
  for (long t = 0; t < steps; ++t) {
    long pi = t, pj = t;
    if (!snf_find_pivot(a, t, pi, pj)) break;
    std::swap(a[t], a[pi]);
    for (long i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      // Clear column t by Euclidean row steps.
      for (long i = t + 1; i < rows; ++i) {
        while (a[i][t] != 0) {
          mpz_class q = a[i][t] / a[t][t];
          for (long j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
          if (a[i][t] != 0) {
            std::swap(a[t], a[i]);
            dirty = true;
          }
        }
      }
      // Clear row t by Euclidean column steps.
      for (long j = t + 1; j < cols; ++j) {
        while (a[t][j] != 0) {
          mpz_class q = a[t][j] / a[t][t];
          for (long i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
          if (a[t][j] != 0) {
            for (long i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
            dirty = true;
          }
        }
      }
    }
    // Divisibility fix-up: pivot must divide every lower-right entry.
    bool fixed = false;
    for (long i = t + 1; i < rows && !fixed; ++i) {
      for (long j = t + 1; j < cols && !fixed; ++j) {
        if (a[i][j] != 0 &&
            mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t()) == 0) {
          for (long jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
          fixed = true;
        }
      }
    }
    if (fixed) {
      --t;  // redo this step with the merged row
      continue;
    }
    if (a[t][t] < 0) a[t][t] = -a[t][t];
    inv.push_back(a[t][t]);
  }
  return inv;
}

}  // namespace meroc
