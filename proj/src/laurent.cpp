#include "jumploci/laurent.hpp"

#include <cassert>
#include <sstream>

#include "jumploci/errors.hpp"

namespace jumploci {

LaurentEntry laurent_zero(const Ring& R) { return {mono_one(R.n), poly_zero(R)}; }

LaurentEntry laurent_normalize(const Ring& R, Mono shift, Polynomial num) {
  if (num.is_zero()) return laurent_zero(R);
  Mono content = num.t.front().m;
  for (const auto& t : num.t) content = mono_gcd(content, t.m);
  if (!mono_is_one(content)) {
    std::vector<Term> terms;
    terms.reserve(num.t.size());
    for (const auto& t : num.t) terms.push_back({t.c, mono_div(t.m, content)});
    num = poly_from_terms(R, terms);
    shift = mono_mul(shift, content);
  }
  return {std::move(shift), std::move(num)};
}

LaurentEntry laurent_from_poly(const Ring& R, const Polynomial& p) {
  return laurent_normalize(R, mono_one(R.n), p);
}

LaurentEntry laurent_add(const Ring& R, const LaurentEntry& a, const LaurentEntry& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Mono base(R.n);
  for (int i = 0; i < R.n; ++i) base[i] = std::min(a.shift[i], b.shift[i]);
  Mono da(R.n), db(R.n);
  for (int i = 0; i < R.n; ++i) {
    da[i] = a.shift[i] - base[i];
    db[i] = b.shift[i] - base[i];
  }
  Polynomial sum = padd(R, pmul_term(R, a.num, 1, da), pmul_term(R, b.num, 1, db));
  return laurent_normalize(R, base, std::move(sum));
}

LaurentEntry laurent_neg(const LaurentEntry& a) { return {a.shift, pneg(a.num)}; }

LaurentEntry laurent_sub(const Ring& R, const LaurentEntry& a, const LaurentEntry& b) {
  return laurent_add(R, a, laurent_neg(b));
}

LaurentEntry laurent_mul(const Ring& R, const LaurentEntry& a, const LaurentEntry& b) {
  if (a.is_zero() || b.is_zero()) return laurent_zero(R);
  // monomial content is multiplicative over a domain, so no re-normalization
  return {mono_mul(a.shift, b.shift), pmul(R, a.num, b.num)};
}

bool laurent_equal(const LaurentEntry& a, const LaurentEntry& b) {
  return a.shift == b.shift && poly_equal(a.num, b.num);
}

Q laurent_eval(const LaurentEntry& a, const std::vector<Q>& point) {
  if (a.is_zero()) return Q(0);
  Q v = poly_eval(a.num, point);
  for (size_t i = 0; i < point.size(); ++i) {
    int e = a.shift[i];
    if (e == 0) continue;
    if (sgn(point[i]) == 0) {
      if (e < 0) throw input_error("Laurent evaluation at a zero coordinate");
      if (e > 0) return Q(0);
    }
    for (int k = 0; k < e; ++k) v *= point[i];
    for (int k = 0; k > e; --k) v /= point[i];
  }
  return v;
}

std::string laurent_str(const Ring& R, const LaurentEntry& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool shifted = !mono_is_one(a.shift);
  if (shifted) {
    bool first = true;
    for (int i = 0; i < R.n; ++i) {
      if (a.shift[i] == 0) continue;
      if (!first) os << "*";
      os << R.names[i];
      if (a.shift[i] != 1) os << "^" << a.shift[i];
      first = false;
    }
    os << "*(" << poly_str(R, a.num) << ")";
  } else {
    os << poly_str(R, a.num);
  }
  return os.str();
}

LaurentMatrix laurent_matrix(const Ring& R, int rows, int cols) {
  LaurentMatrix M;
  M.ring = R;
  M.rows = rows;
  M.cols = cols;
  M.a.assign(static_cast<size_t>(rows) * cols, laurent_zero(R));
  return M;
}

LaurentMatrix laurent_matrix_from_polys(const Ring& R, int rows, int cols,
                                        const std::vector<Polynomial>& entries) {
  assert(static_cast<int>(entries.size()) == rows * cols);
  LaurentMatrix M = laurent_matrix(R, rows, cols);
  for (size_t i = 0; i < entries.size(); ++i) M.a[i] = laurent_from_poly(R, entries[i]);
  return M;
}

std::vector<std::vector<Q>> laurent_eval_matrix(const LaurentMatrix& M,
                                                const std::vector<Q>& point) {
  std::vector<std::vector<Q>> out(M.rows, std::vector<Q>(M.cols));
  for (int r = 0; r < M.rows; ++r)
    for (int c = 0; c < M.cols; ++c) out[r][c] = laurent_eval(M.at(r, c), point);
  return out;
}

int rank_q(std::vector<std::vector<Q>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  size_t pr = 0;
  for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
    size_t piv = pr;
    while (piv < rows && sgn(m[piv][pc]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[pr], m[piv]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == pr || sgn(m[r][pc]) == 0) continue;
      Q f = m[r][pc] / m[pr][pc];
      for (size_t c = pc; c < cols; ++c) m[r][c] -= f * m[pr][c];
    }
    ++pr;
    ++rank;
  }
  return rank;
}

}  // namespace jumploci
