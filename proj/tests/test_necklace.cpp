#include <doctest.h>

#include <functional>
#include <set>

#include "meroc/elliptic.hpp"
#include "meroc/necklace.hpp"

using namespace meroc;

namespace {

// Independent recursive enumeration oracle.
long count_recursive(int m, int cutoff) {
  std::function<long(int)> rec = [&](int left) -> long {
    if (left == 0) return 1;
    long acc = 0;
    for (int a = 1; a <= cutoff; ++a) acc += rec(left - 1);
    return acc;
  };
  return rec(m);
}

}  // namespace

TEST_CASE("A-matrix entries: examples and symmetry") {
  WMat a1 = amatrix_exact(3, 1, 8);
  // (1,1) = eps_1 * E2.
  const WeightValue& e11 = a1(0, 0);
  REQUIRE(e11.terms().size() == 1);
  const auto& [key, coeff] = *e11.terms().begin();
  CHECK(key.eps1_doubled == 2);
  CHECK(key.eps2_doubled == 0);
  CHECK(key.root == 1);
  QSeries e2 = eisenstein_q(2, 8);
  CHECK(coeff.merge_variables().agrees_with(e2, 8));

  // (1,2) vanishes: C(1,2) = 2 E3 = 0.
  CHECK(a1(0, 1).is_exact_zero());

  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) CHECK(a1(k, l) == a1(l, k));

  WMat a2 = amatrix_exact(3, 2, 8);
  const auto& [key2, c2] = *a2(0, 0).terms().begin();
  CHECK(key2.eps1_doubled == 0);
  CHECK(key2.eps2_doubled == 2);
}

TEST_CASE("A-matrix root pairs stay square-root free") {
  WMat a = amatrix_exact(4, 1, 4);
  // Entry (2,2): 1/sqrt(4) = 1/2 exactly, so the root collapses to 1.
  const auto& [key, coeff] = *a(1, 1).terms().begin();
  CHECK(key.root == 1);
  // Entry (1,2) is zero; entry (2,4) has kl = 8 -> root 2.
  const auto& [key24, c24] = *a(1, 3).terms().begin();
  CHECK(key24.root == 2);
}

TEST_CASE("necklace enumeration: counts and uniqueness") {
  CHECK(enumerate_necklaces(2, 2, 1).size() == 4);
  CHECK(enumerate_necklaces(3, 3, 1).size() == 27);
  for (int m = 2; m <= 4; ++m) {
    for (int cutoff = 1; cutoff <= 3; ++cutoff) {
      std::vector<Necklace> all = enumerate_necklaces(m, cutoff, 1);
      CHECK(static_cast<long>(all.size()) == count_recursive(m, cutoff));
      std::set<Necklace> dedup(all.begin(), all.end());
      CHECK(dedup.size() == all.size());
    }
  }
}

TEST_CASE("necklace weights: products over edges") {
  WMat a1 = amatrix_exact(3, 1, 6);
  WMat a2 = amatrix_exact(3, 2, 6);

  // Degenerate N_0.
  Necklace n0;
  CHECK(necklace_weight(n0, a1, a2) == WeightValue(1));

  // m = 2: a single factor selected by the first edge label.
  Necklace n2{{2, 3}, 1};
  CHECK(necklace_weight(n2, a1, a2) == a1(1, 2));
  Necklace n2b{{2, 3}, 2};
  CHECK(necklace_weight(n2b, a1, a2) == a2(1, 2));

  // m = 3: two alternating factors.
  Necklace n3{{1, 3, 1}, 1};
  WeightValue want = a1(0, 2) * a2(2, 0);
  CHECK(necklace_weight(n3, a1, a2) == want);

  // Labels beyond the truncation are rejected.
  Necklace big{{1, 4}, 1};
  CHECK_THROWS_AS(necklace_weight(big, a1, a2), TruncationError);
}

TEST_CASE("epsilon grading: a weight is a single monomial") {
  WMat a1 = amatrix_exact(4, 1, 4);
  WMat a2 = amatrix_exact(4, 2, 4);
  // Even label sums keep every edge factor nonzero.
  Necklace n{{1, 3, 1, 3}, 1};  // edges: (1,3) label 1, (3,1) label 2, (1,3) label 1
  WeightValue w = necklace_weight(n, a1, a2);
  REQUIRE(w.terms().size() == 1);
  const auto& key = w.terms().begin()->first;
  CHECK(key.eps1_doubled == (1 + 3) + (1 + 3));
  CHECK(key.eps2_doubled == (3 + 1));

  // An odd label sum on any edge kills the weight entirely.
  Necklace odd{{1, 2}, 1};
  CHECK(necklace_weight(odd, a1, a2).is_exact_zero());
}

TEST_CASE("necklace sums: direct equals transfer") {
  // m = 2 ignores the cutoff beyond the end labels.
  ExactNecklaceSum s2 = necklace_sum_exact(2, 1, 2, 3, 1, 6);
  WMat a1 = amatrix_exact(3, 1, 6);
  CHECK(s2.direct == a1(0, 1));
  CHECK(s2.equal);

  // m = 3, ends (1,1): the (A1 A2) entry.
  ExactNecklaceSum s3 = necklace_sum_exact(3, 1, 1, 3, 1, 6);
  CHECK(s3.equal);
  WMat a2 = amatrix_exact(3, 2, 6);
  WeightValue manual(0);
  for (int j = 0; j < 3; ++j) manual += a1(0, j) * a2(j, 0);
  CHECK(s3.direct.agrees_with(manual, 6, 6));

  // Exhaustive small sweep; the library itself asserts path equality.
  for (int m = 2; m <= 4; ++m)
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3; ++l)
        for (int first = 1; first <= 2; ++first)
          CHECK(necklace_sum_exact(m, k, l, 3, first, 4).equal);
}

TEST_CASE("threaded enumeration matches the serial path") {
  ExactNecklaceSum serial = necklace_sum_exact(5, 2, 1, 3, 1, 4, 1);
  ExactNecklaceSum threaded = necklace_sum_exact(5, 2, 1, 3, 1, 4, 4);
  CHECK(serial.direct == threaded.direct);
  CHECK(serial.transfer == threaded.transfer);
}

TEST_CASE("palindromic sums are symmetric under swapping the ends") {
  // m = 4 has edge labels (1,2,1): reversing a necklace lands in the same
  // family, so the sum is symmetric in the end labels even with formally
  // split parameters.
  ExactNecklaceSum a = necklace_sum_exact(4, 1, 2, 3, 1, 4);
  ExactNecklaceSum b = necklace_sum_exact(4, 2, 1, 3, 1, 4);
  CHECK(a.direct.agrees_with(b.direct, 4, 4));
}

TEST_CASE("reversal with equal parameters via merged variables") {
  WMat a1 = amatrix_exact(3, 1, 6);
  WMat a2 = amatrix_exact(3, 2, 6);
  Necklace n{{2, 3, 1}, 1};
  Necklace r = n.reversed();
  CHECK(r.labels == std::vector<int>{1, 3, 2});
  CHECK(r.first_edge == 2);
  WeightValue wn = necklace_weight(n, a1, a2);
  WeightValue wr = necklace_weight(r, a1, a2);
  // Bivariate values differ (the q variables swap roles); after merging the
  // parameters they agree.
  auto mn = wn.merge_parameters();
  auto mr = wr.merge_parameters();
  REQUIRE(mn.size() == mr.size());
  auto it1 = mn.begin();
  auto it2 = mr.begin();
  for (; it1 != mn.end(); ++it1, ++it2) {
    CHECK(it1->first == it2->first);
    CHECK(it1->second.agrees_with(it2->second, 6));
  }
}

TEST_CASE("numeric necklace sums agree across paths") {
  std::complex<double> tau(0.0, 1.0);
  std::complex<double> eps(0.5, 0.2);
  NumericNecklaceSum s =
      necklace_sum_numeric(4, 1, 2, 3, 1, tau, tau, eps, eps, 24);
  CHECK(s.equal);
  NumericNecklaceSum split = necklace_sum_numeric(
      3, 2, 2, 3, 1, tau, std::complex<double>(0.1, 1.2), eps,
      std::complex<double>(0.3, 0.1), 24);
  CHECK(split.equal);
}
