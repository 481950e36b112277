#include "jumploci/minors.hpp"

#include <cassert>
#include <cstdint>
#include <functional>
#include <unordered_map>

namespace jumploci {

namespace {

// Laplace expansion along the rows of the fixed row list, memoized on the set
// of still-unused columns (bits are actual column indices; the row position is
// the number of already-consumed columns). The memo is shared across all
// column subsets of one row subset.
struct MinorContext {
  const LaurentMatrix& M;
  const std::vector<int>& rows;
  std::unordered_map<uint64_t, LaurentEntry> memo;

  LaurentEntry det(uint64_t colmask) {
    int level = static_cast<int>(rows.size()) - __builtin_popcountll(colmask);
    if (level == static_cast<int>(rows.size())) return laurent_from_poly(M.ring, poly_one(M.ring));
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    LaurentEntry acc = laurent_zero(M.ring);
    int sign = 1;
    for (int c = 0; c < M.cols; ++c) {
      if (!(colmask & (1ull << c))) continue;
      const LaurentEntry& e = M.at(rows[level], c);
      if (!e.is_zero()) {
        LaurentEntry sub = det(colmask & ~(1ull << c));
        if (!sub.is_zero()) {
          LaurentEntry term = laurent_mul(M.ring, e, sub);
          if (sign < 0) term = laurent_neg(term);
          acc = laurent_add(M.ring, acc, term);
        }
      }
      sign = -sign;
    }
    memo.emplace(colmask, acc);
    return acc;
  }
};

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

uint64_t mask_of(const std::vector<int>& cols) {
  uint64_t m = 0;
  for (int c : cols) m |= 1ull << c;
  return m;
}

}  // namespace

LaurentEntry laurent_minor(const LaurentMatrix& M, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
  assert(rows.size() == cols.size());
  assert(M.cols <= 64);
  MinorContext ctx{M, rows, {}};
  return ctx.det(mask_of(cols));
}

Ideal minors_ideal(const LaurentMatrix& M, int size) {
  const Ring& R = M.ring;
  if (size <= 0) return unit_ideal(R);
  if (size > M.rows || size > M.cols) return zero_ideal(R);
  assert(M.cols <= 64);

  std::vector<Polynomial> gens;
  combinations(M.rows, size, [&](const std::vector<int>& rows) {
    MinorContext ctx{M, rows, {}};
    combinations(M.cols, size, [&](const std::vector<int>& cols) {
      LaurentEntry minor = ctx.det(mask_of(cols));
      if (minor.is_zero()) return;
      // Clear only the negative exponents: the generator is the minor times
      // x^(-min(shift,0)), the least monomial landing it in the polynomial
      // ring. Positive monomial content stays, so affine zero sets (resonance,
      // infinitesimal loci) survive; on the torus the factor is a unit anyway.
      Mono keep = minor.shift;
      for (int& e : keep)
        if (e < 0) e = 0;
      Polynomial g = canonical_scale(minor.num);
      if (!mono_is_one(keep)) g = pmul_term(R, g, Q(1), keep);
      for (const auto& seen : gens)
        if (poly_equal(seen, g)) return;
      gens.push_back(std::move(g));
    });
  });
  return make_ideal(R, std::move(gens));
}

Ideal fitting_ideal(const LaurentMatrix& M, int k) { return minors_ideal(M, M.rows - k); }

}  // namespace jumploci
