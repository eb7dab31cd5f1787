#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "meroc/eigen_support.hpp"
#include "meroc/weight_value.hpp"

namespace Eigen {

template <>
struct NumTraits<meroc::WeightValue>
    : GenericNumTraits<meroc::WeightValue> {
  typedef meroc::WeightValue Real;
  typedef meroc::WeightValue NonInteger;
  typedef meroc::WeightValue Nested;
  typedef meroc::WeightValue Literal;
  static inline Real epsilon() { return meroc::WeightValue(); }
  static inline Real dummy_precision() { return meroc::WeightValue(); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 32,
    AddCost = 500,
    MulCost = 800,
  };
};

}  // namespace Eigen

namespace meroc {

// Chequered necklace: a path graph with positive-integer node labels and
// edge labels alternating in {1, 2}.  The empty necklace N_0 is the
// degenerate case with weight 1.
struct Necklace {
  std::vector<int> labels;  // node labels, m >= 2 (or empty for N_0)
  int first_edge = 1;

  int nodes() const { return static_cast<int>(labels.size()); }
  int edges() const { return labels.empty() ? 0 : nodes() - 1; }
  int edge_label(int i) const {  // 0-based edge index
    return i % 2 == 0 ? first_edge : 3 - first_edge;
  }
  Necklace reversed() const;
  void validate(int label_cutoff = 0) const;

  bool operator==(const Necklace& o) const {
    return labels == o.labels && (labels.size() < 2 || first_edge == o.first_edge);
  }
  bool operator<(const Necklace& o) const {
    if (labels != o.labels) return labels < o.labels;
    return first_edge < o.first_edge;
  }
};

using WMat = Eigen::Matrix<WeightValue, Eigen::Dynamic, Eigen::Dynamic>;
using CMat = Eigen::MatrixXcd;

// Truncated A-matrix in exact mode: entry (k,l) (1-based labels) is
//   eps_a^{(k+l)/2} / sqrt(kl) * C(k,l, tau_a)
// with the q-expansion of C in the edge label's own q-variable and the
// square root kept exactly as a (rational, squarefree-root) pair.
WMat amatrix_exact(int size, int edge_label, int q_order);

// Numeric mode with the principal branch for the half-integer eps powers.
CMat amatrix_numeric(int size, std::complex<double> tau,
                     std::complex<double> eps, int q_order);

// All cutoff^m labelings of the m-node path, alternating edge labels
// starting at first_edge, streamed in lexicographic order.
void for_each_necklace(int m, int label_cutoff, int first_edge,
                       const std::function<void(const Necklace&)>& fn);
std::vector<Necklace> enumerate_necklaces(int m, int label_cutoff,
                                          int first_edge);

// omega(N) = product of A-entries over the edges; the degenerate N_0 gives 1.
template <class Mat>
typename Mat::Scalar necklace_weight(const Necklace& n, const Mat& a1,
                                     const Mat& a2) {
  using Scalar = typename Mat::Scalar;
  if (n.labels.empty()) return Scalar(1);
  n.validate(static_cast<int>(a1.rows()));
  Scalar acc(1);
  for (int i = 0; i < n.edges(); ++i) {
    const Mat& a = n.edge_label(i) == 1 ? a1 : a2;
    acc = acc * a(n.labels[i] - 1, n.labels[i + 1] - 1);
  }
  return acc;
}

// Alternating transfer product A_{a_1} A_{a_2} ... (count factors).
template <class Mat>
Mat transfer_product(const Mat& a1, const Mat& a2, int first_edge, int count) {
  using Scalar = typename Mat::Scalar;
  const auto n = a1.rows();
  Mat acc(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) acc(i, j) = Scalar(i == j ? 1 : 0);
  for (int e = 0; e < count; ++e) {
    const Mat& a = (e % 2 == 0 ? first_edge : 3 - first_edge) == 1 ? a1 : a2;
    Mat next(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        Scalar s(0);
        for (Eigen::Index t = 0; t < n; ++t) s = s + acc(i, t) * a(t, j);
        next(i, j) = s;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

struct ExactNecklaceSum {
  WeightValue direct;
  WeightValue transfer;
  bool equal = false;
};

// Sum of omega over all interior labelings with the given end labels,
// computed both by direct enumeration and as the transfer-matrix entry;
// throws ConsistencyError when the two paths disagree on the guaranteed
// window.  The enumeration partitions across `threads` workers; partial
// sums are merged in worker order, so the result does not depend on the
// thread count.
ExactNecklaceSum necklace_sum_exact(int m, int end_k, int end_l,
                                    int label_cutoff, int first_edge,
                                    int q_order, int threads = 1);

struct NumericNecklaceSum {
  std::complex<double> direct;
  std::complex<double> transfer;
  bool equal = false;
};

NumericNecklaceSum necklace_sum_numeric(int m, int end_k, int end_l,
                                        int label_cutoff, int first_edge,
                                        std::complex<double> tau1,
                                        std::complex<double> tau2,
                                        std::complex<double> eps1,
                                        std::complex<double> eps2, int q_order);

}  // namespace meroc
