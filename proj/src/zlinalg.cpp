#include "adicert/zlinalg.hpp"

#include <algorithm>
#include <cassert>

namespace adicert {

namespace {

void row_axpy(ZRow& dst, const mpz_class& q, const ZRow& src) {
  for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
}

} // namespace

HermiteForm hermite(const ZMat& A, std::size_t cols) {
  HermiteForm hf;
  std::size_t rows = A.size();
  hf.H = A;
  for (auto& r : hf.H) r.resize(cols, 0);
  hf.U.assign(rows, ZRow(rows, 0));
  for (std::size_t i = 0; i < rows; ++i) hf.U[i][i] = 1;

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // gcd elimination in column c among rows >= r
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (hf.H[i][c] == 0) continue;
        if (best == rows || cmp(abs(hf.H[i][c]), abs(hf.H[best][c])) < 0) best = i;
      }
      if (best == rows) break;
      std::swap(hf.H[r], hf.H[best]);
      std::swap(hf.U[r], hf.U[best]);
      bool others = false;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (hf.H[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), hf.H[i][c].get_mpz_t(), hf.H[r][c].get_mpz_t());
        row_axpy(hf.H[i], q, hf.H[r]);
        row_axpy(hf.U[i], q, hf.U[r]);
        if (hf.H[i][c] != 0) others = true;
      }
      if (!others) break;
    }
    if (hf.H[r][c] == 0) continue;
    if (hf.H[r][c] < 0) {
      for (auto& x : hf.H[r]) x = -x;
      for (auto& x : hf.U[r]) x = -x;
    }
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), hf.H[i][c].get_mpz_t(), hf.H[r][c].get_mpz_t());
      if (q != 0) {
        row_axpy(hf.H[i], q, hf.H[r]);
        row_axpy(hf.U[i], q, hf.U[r]);
      }
    }
    hf.pivot_col.push_back((int)c);
    ++r;
  }
  hf.rank = (int)r;
  return hf;
}

ZMat z_left_kernel(const ZMat& A, std::size_t cols) {
  HermiteForm hf = hermite(A, cols);
  ZMat ker;
  for (std::size_t i = hf.rank; i < A.size(); ++i) ker.push_back(hf.U[i]);
  return ker;
}

ZDivision z_divide(const HermiteForm& hf, const ZRow& v) {
  ZDivision d;
  d.rem = v;
  d.rem.resize(hf.H.empty() ? v.size() : hf.H[0].size(), 0);
  d.coeffs.assign(hf.U.size(), 0);
  for (int i = 0; i < hf.rank; ++i) {
    int c = hf.pivot_col[i];
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), d.rem[c].get_mpz_t(), hf.H[i][c].get_mpz_t());
    if (q != 0) {
      row_axpy(d.rem, q, hf.H[i]);
      for (std::size_t j = 0; j < d.coeffs.size(); ++j) d.coeffs[j] += q * hf.U[i][j];
    }
  }
  return d;
}

ZDivision z_divide(const ZMat& A, std::size_t cols, const ZRow& v) {
  return z_divide(hermite(A, cols), v);
}

std::vector<mpz_class> smith_invariants(const ZMat& A, std::size_t cols) {
  ZMat M = A;
  for (auto& r : M) r.resize(cols, 0);
  std::size_t rows = M.size();
  std::vector<mpz_class> inv;
  std::size_t r0 = 0, c0 = 0;
  while (r0 < rows && c0 < cols) {
    // find a nonzero pivot in the remaining block
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = r0; i < rows; ++i)
      for (std::size_t j = c0; j < cols; ++j)
        if (M[i][j] != 0 &&
            (pi == rows || cmp(abs(M[i][j]), abs(M[pi][pj])) < 0)) { pi = i; pj = j; }
    if (pi == rows) break;
    std::swap(M[r0], M[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(M[i][c0], M[i][pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = r0 + 1; i < rows; ++i) {
        if (M[i][c0] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), M[i][c0].get_mpz_t(), M[r0][c0].get_mpz_t());
        row_axpy(M[i], q, M[r0]);
        if (M[i][c0] != 0) { std::swap(M[r0], M[i]); clean = false; }
      }
      for (std::size_t j = c0 + 1; j < cols; ++j) {
        if (M[r0][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), M[r0][j].get_mpz_t(), M[r0][c0].get_mpz_t());
        for (std::size_t i = r0; i < rows; ++i) M[i][j] -= q * M[i][c0];
        if (M[r0][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(M[i][c0], M[i][j]);
          clean = false;
        }
      }
    }
    inv.push_back(abs(M[r0][c0]));
    ++r0; ++c0;
  }
  // enforce the divisibility chain d_1 | d_2 | ...
  bool fixed = false;
  while (!fixed) {
    fixed = true;
    for (std::size_t i = 0; i + 1 < inv.size(); ++i) {
      if (inv[i + 1] % inv[i] != 0) {
        mpz_class g, l;
        mpz_gcd(g.get_mpz_t(), inv[i].get_mpz_t(), inv[i + 1].get_mpz_t());
        mpz_lcm(l.get_mpz_t(), inv[i].get_mpz_t(), inv[i + 1].get_mpz_t());
        inv[i] = g;
        inv[i + 1] = l;
        fixed = false;
      }
    }
  }
  return inv;
}

} // namespace adicert
