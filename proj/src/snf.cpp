#include "jumploci/snf.hpp"

#include <cassert>

namespace jumploci {

ZMat zmat(int rows, int cols) { return ZMat(rows, std::vector<Z>(cols, Z(0))); }

ZMat zmat_identity(int n) {
  ZMat m = zmat(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
  assert(!a.empty() && !b.empty() && a[0].size() == b.size());
  ZMat r = zmat(static_cast<int>(a.size()), static_cast<int>(b[0].size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Z zmat_det(ZMat a) {
  // Bareiss fraction-free elimination.
  int n = static_cast<int>(a.size());
  if (n == 0) return Z(1);
  Z prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (sgn(a[k][k]) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (sgn(a[i][k]) != 0) {
          p = i;
          break;
        }
      if (p < 0) return Z(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Z t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Z(-a[n - 1][n - 1]);
}

namespace {

struct SNFWork {
  ZMat A, U, V;
  int rows, cols;

  void swap_rows(int i, int j) {
    if (i == j) return;
    std::swap(A[i], A[j]);
    std::swap(U[i], U[j]);
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (auto& row : A) std::swap(row[i], row[j]);
    for (auto& row : V) std::swap(row[i], row[j]);
  }
  void add_row(int dst, int src, const Z& f) {  // row_dst += f * row_src
    for (int c = 0; c < cols; ++c) A[dst][c] += f * A[src][c];
    for (size_t c = 0; c < U[dst].size(); ++c) U[dst][c] += f * U[src][c];
  }
  void add_col(int dst, int src, const Z& f) {
    for (int r = 0; r < rows; ++r) A[r][dst] += f * A[r][src];
    for (auto& row : V) row[dst] += f * row[src];
  }
  void negate_row(int i) {
    for (auto& x : A[i]) x = -x;
    for (auto& x : U[i]) x = -x;
  }
};

}  // namespace

SNFResult smith_normal_form(const ZMat& A0) {
  int rows = static_cast<int>(A0.size());
  int cols = rows > 0 ? static_cast<int>(A0[0].size()) : 0;
  SNFWork w{A0, zmat_identity(rows), zmat_identity(cols), rows, cols};
  if (rows == 0 || cols == 0) return {w.U, w.A, w.V};

  int t = 0;
  int bound = std::min(rows, cols);
  while (t < bound) {
    // pivot: smallest nonzero absolute value in the remaining block
    int pr = -1, pc = -1;
    Z best;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (sgn(w.A[i][j]) == 0) continue;
        Z v = abs(w.A[i][j]);
        if (pr < 0 || v < best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;  // remaining block zero
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);

    bool clean = true;
    for (int i = t + 1; i < rows; ++i) {
      if (sgn(w.A[i][t]) == 0) continue;
      Z q;
      mpz_fdiv_q(q.get_mpz_t(), w.A[i][t].get_mpz_t(), w.A[t][t].get_mpz_t());
      w.add_row(i, t, Z(-q));
      if (sgn(w.A[i][t]) != 0) clean = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (sgn(w.A[t][j]) == 0) continue;
      Z q;
      mpz_fdiv_q(q.get_mpz_t(), w.A[t][j].get_mpz_t(), w.A[t][t].get_mpz_t());
      w.add_col(j, t, Z(-q));
      if (sgn(w.A[t][j]) != 0) clean = false;
    }
    if (!clean) continue;  // re-pick a smaller pivot

    // pivot must divide every remaining entry; otherwise absorb a bad row
    bool divides_all = true;
    for (int i = t + 1; i < rows && divides_all; ++i)
      for (int j = t + 1; j < cols && divides_all; ++j) {
        if (sgn(w.A[i][j]) == 0) continue;
        if (!mpz_divisible_p(w.A[i][j].get_mpz_t(), w.A[t][t].get_mpz_t())) {
          w.add_row(t, i, Z(1));
          divides_all = false;
        }
      }
    if (!divides_all) continue;

    if (sgn(w.A[t][t]) < 0) w.negate_row(t);
    ++t;
  }
  return {w.U, w.A, w.V};
}

}  // namespace jumploci
