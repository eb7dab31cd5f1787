#pragma once

#include <vector>

#include "meroc/eigen_support.hpp"

namespace meroc {

// Row-wise denominator clearing; preserves rank and row space up to scaling.
std::vector<std::vector<mpz_class>> to_integer_rows(const MatQ& m);

// Fraction-free Gaussian elimination (Bareiss): exact, integer-only
// intermediates, no rounding.  Returns the rank.
long bareiss_rank(std::vector<std::vector<mpz_class>> a);

long rank_exact(const MatQ& m);
long kernel_dim(const MatQ& m);  // cols - rank

bool is_zero_matrix(const MatQ& m);
// Index of the first column with a nonzero entry, or -1.
long first_nonzero_column(const MatQ& m);

// Smith normal form invariant factors d_1 | d_2 | ... (non-negative,
// trailing zeros trimmed) of an integer matrix.
std::vector<mpz_class> smith_invariants(std::vector<std::vector<mpz_class>> a);

}  // namespace meroc
