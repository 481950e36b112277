#include "jumploci/subspace.hpp"

#include <cassert>

namespace jumploci {

QMat rref(QMat m) {
  if (m.empty()) return m;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int lead = 0;
  for (int r = 0; r < rows && lead < cols; ++r) {
    int piv = -1;
    for (; lead < cols; ++lead) {
      for (int i = r; i < rows; ++i) {
        if (m[i][lead] != 0) { piv = i; break; }
      }
      if (piv >= 0) break;
    }
    if (piv < 0) break;
    std::swap(m[r], m[piv]);
    Q inv = 1 / m[r][lead];
    for (int j = lead; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][lead] == 0) continue;
      Q f = m[i][lead];
      for (int j = lead; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++lead;
  }
  while (!m.empty()) {
    bool zero = true;
    for (const Q& x : m.back()) {
      if (x != 0) { zero = false; break; }
    }
    if (!zero) break;
    m.pop_back();
  }
  return m;
}

Subspace make_subspace(int n, QMat vectors) {
  for (const auto& v : vectors) assert(static_cast<int>(v.size()) == n);
  Subspace s;
  s.n = n;
  s.basis = rref(std::move(vectors));
  return s;
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
  return a.n == b.n && a.basis == b.basis;
}

bool subspace_contains(const Subspace& s, const QVec& v) {
  assert(static_cast<int>(v.size()) == s.n);
  QVec w = v;
  for (const auto& row : s.basis) {
    int lead = -1;
    for (int j = 0; j < s.n; ++j) {
      if (row[j] != 0) { lead = j; break; }
    }
    if (lead < 0) continue;
    if (w[lead] != 0) {
      Q f = w[lead];
      for (int j = 0; j < s.n; ++j) w[j] -= f * row[j];
    }
  }
  for (const Q& x : w) {
    if (x != 0) return false;
  }
  return true;
}

bool subspace_leq(const Subspace& a, const Subspace& b) {
  assert(a.n == b.n);
  for (const auto& row : a.basis) {
    if (!subspace_contains(b, row)) return false;
  }
  return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  assert(a.n == b.n);
  QMat vecs = a.basis;
  vecs.insert(vecs.end(), b.basis.begin(), b.basis.end());
  return make_subspace(a.n, std::move(vecs));
}

// Kernel of a matrix, as canonical (RREF) basis rows of length cols.
static QMat kernel_basis(const QMat& m, int cols) {
  QMat red = rref(m);
  std::vector<int> lead_of_row;
  std::vector<bool> is_pivot(cols, false);
  for (const auto& row : red) {
    for (int j = 0; j < cols; ++j) {
      if (row[j] != 0) {
        lead_of_row.push_back(j);
        is_pivot[j] = true;
        break;
      }
    }
  }
  QMat ker;
  for (int j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    QVec v(cols, Q(0));
    v[j] = 1;
    for (size_t r = 0; r < red.size(); ++r) v[lead_of_row[r]] = -red[r][j];
    ker.push_back(std::move(v));
  }
  return rref(std::move(ker));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  assert(a.n == b.n);
  const int da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return make_subspace(a.n, {});
  // Solve c.A = d.B: kernel of [A^T | -B^T] gives the coefficient pairs.
  QMat sys(a.n, QVec(da + db, Q(0)));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < a.n; ++j) sys[j][i] = a.basis[i][j];
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < a.n; ++j) sys[j][da + i] = -b.basis[i][j];
  QMat ker = kernel_basis(sys, da + db);
  QMat vecs;
  for (const auto& coef : ker) {
    QVec v(a.n, Q(0));
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < a.n; ++j) v[j] += coef[i] * a.basis[i][j];
    vecs.push_back(std::move(v));
  }
  return make_subspace(a.n, std::move(vecs));
}

QMat annihilator(const Subspace& s) {
  if (s.dim() == 0) {
    QMat forms;
    for (int j = 0; j < s.n; ++j) {
      QVec v(s.n, Q(0));
      v[j] = 1;
      forms.push_back(std::move(v));
    }
    return forms;
  }
  return kernel_basis(s.basis, s.n);
}

std::vector<Polynomial> defining_forms(const Ring& R, const Subspace& s) {
  assert(R.n == s.n);
  std::vector<Polynomial> out;
  for (const auto& form : annihilator(s)) {
    Polynomial p = poly_zero(R);
    for (int j = 0; j < R.n; ++j) {
      if (form[j] != 0) p = padd(R, p, pscale(poly_var(R, j, 1), form[j]));
    }
    out.push_back(canonical_scale(p));
  }
  return out;
}

}  // namespace jumploci
