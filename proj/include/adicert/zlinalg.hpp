#pragma once

#include <gmpxx.h>
#include <vector>

namespace adicert {

using ZRow = std::vector<mpz_class>;
using ZMat = std::vector<ZRow>; // row major

/// Row Hermite normal form U*A = H with U unimodular; H in row echelon
/// form with positive pivots and entries above each pivot reduced into
/// [0, pivot).
struct HermiteForm {
  ZMat H;
  ZMat U;
  std::vector<int> pivot_col; // one per nonzero row (the first `rank` rows)
  int rank = 0;
};

HermiteForm hermite(const ZMat& A, std::size_t cols);

/// Rows spanning {v : v*A = 0}.
ZMat z_left_kernel(const ZMat& A, std::size_t cols);

struct ZDivision {
  ZRow rem;    // canonical representative of v modulo rowspan(A)
  ZRow coeffs; // v = coeffs*A + rem
};

ZDivision z_divide(const HermiteForm& hf, const ZRow& v);
ZDivision z_divide(const ZMat& A, std::size_t cols, const ZRow& v);

/// Nonzero diagonal invariant factors d_1 | d_2 | ... of A.
std::vector<mpz_class> smith_invariants(const ZMat& A, std::size_t cols);

} // namespace adicert
