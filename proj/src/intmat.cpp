#include "intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "errors.hpp"

namespace frobtwist {

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) fail_internal("integer overflow in add");
  return r;
}

i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) fail_internal("integer overflow in sub");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) fail_internal("integer overflow in mul");
  return r;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](i64 v) { return v == 0; });
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) fail_internal("matmul shape mismatch");
  IntMatrix r(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      i64 v = a.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        i64 w = b.at(k, j);
        if (w != 0) r.at(i, j) = checked_add(r.at(i, j), checked_mul(v, w));
      }
    }
  }
  return r;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows * b.rows, a.cols * b.cols);
  for (std::size_t ia = 0; ia < a.rows; ++ia)
    for (std::size_t ja = 0; ja < a.cols; ++ja) {
      i64 v = a.at(ia, ja);
      if (v == 0) continue;
      for (std::size_t ib = 0; ib < b.rows; ++ib)
        for (std::size_t jb = 0; jb < b.cols; ++jb) {
          i64 w = b.at(ib, jb);
          if (w != 0) r.at(ia * b.rows + ib, ja * b.cols + jb) = checked_mul(v, w);
        }
    }
  return r;
}

namespace {

// Nearest-integer division keeps remainders at most half the divisor, which
// makes the reduction loop terminate quickly.
i64 div_round(i64 a, i64 b) {
  i64 q = a / b;
  i64 r = a % b;
  if (r != 0 && std::llabs(r) * 2 > std::llabs(b)) q += (a < 0) == (b < 0) ? 1 : -1;
  return q;
}

// Diagonalizes `a` in place by unimodular row/column operations. Row
// operations are mirrored onto `rhs` (if given), column operations are
// accumulated into `col_acc` (if given) so that x = col_acc · z maps solutions
// of the diagonal system back to the original one.
void diagonalize(IntMatrix& a, std::vector<i64>* rhs, IntMatrix* col_acc) {
  const std::size_t m = a.rows, n = a.cols;
  const std::size_t steps = std::min(m, n);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t t = 0; t < n; ++t) std::swap(a.at(i, t), a.at(j, t));
    if (rhs) std::swap((*rhs)[i], (*rhs)[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t t = 0; t < m; ++t) std::swap(a.at(t, i), a.at(t, j));
    if (col_acc)
      for (std::size_t t = 0; t < col_acc->rows; ++t)
        std::swap(col_acc->at(t, i), col_acc->at(t, j));
  };
  // row_i -= q * row_k
  auto row_sub = [&](std::size_t i, std::size_t k, i64 q) {
    for (std::size_t t = 0; t < n; ++t)
      if (a.at(k, t) != 0) a.at(i, t) = checked_sub(a.at(i, t), checked_mul(q, a.at(k, t)));
    if (rhs) (*rhs)[i] = checked_sub((*rhs)[i], checked_mul(q, (*rhs)[k]));
  };
  // col_j -= q * col_k
  auto col_sub = [&](std::size_t j, std::size_t k, i64 q) {
    for (std::size_t t = 0; t < m; ++t)
      if (a.at(t, k) != 0) a.at(t, j) = checked_sub(a.at(t, j), checked_mul(q, a.at(t, k)));
    if (col_acc)
      for (std::size_t t = 0; t < col_acc->rows; ++t)
        if (col_acc->at(t, k) != 0)
          col_acc->at(t, j) = checked_sub(col_acc->at(t, j), checked_mul(q, col_acc->at(t, k)));
  };

  for (std::size_t k = 0; k < steps; ++k) {
    for (;;) {
      // Smallest nonzero entry of the trailing submatrix becomes the pivot.
      std::size_t pi = k, pj = k;
      i64 best = 0;
      for (std::size_t i = k; i < m && best != 1; ++i)
        for (std::size_t j = k; j < n; ++j) {
          i64 v = std::llabs(a.at(i, j));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
            if (best == 1) break;
          }
        }
      if (best == 0) return;  // trailing submatrix is zero
      swap_rows(k, pi);
      swap_cols(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        i64 v = a.at(i, k);
        if (v == 0) continue;
        i64 q = div_round(v, a.at(k, k));
        if (q != 0) row_sub(i, k, q);
        if (a.at(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        i64 v = a.at(k, j);
        if (v == 0) continue;
        i64 q = div_round(v, a.at(k, k));
        if (q != 0) col_sub(j, k, q);
        if (a.at(k, j) != 0) clean = false;
      }
      if (clean) break;
    }
  }
}

}  // namespace

std::vector<i64> smith_diagonal(IntMatrix a) {
  diagonalize(a, nullptr, nullptr);
  std::size_t steps = std::min(a.rows, a.cols);
  std::vector<i64> diag(steps);
  for (std::size_t k = 0; k < steps; ++k) diag[k] = std::llabs(a.at(k, k));
  return diag;
}

std::vector<i64> invariant_factors(const IntMatrix& a) {
  std::vector<i64> d = smith_diagonal(a);
  d.erase(std::remove(d.begin(), d.end(), 0), d.end());
  // diag(a, b) and diag(gcd, lcm) present the same module, so the
  // divisibility chain can be restored on the diagonal alone.
  for (bool settled = false; !settled;) {
    settled = true;
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j)
        if (d[j] % d[i] != 0) {
          i64 g = std::gcd(d[i], d[j]);
          d[j] = checked_mul(d[i] / g, d[j]);
          d[i] = g;
          settled = false;
        }
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::size_t integer_rank(const IntMatrix& a) {
  std::vector<i64> d = smith_diagonal(a);
  return static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [](i64 v) { return v != 0; }));
}

bool is_unimodular(const IntMatrix& a) {
  if (a.rows != a.cols) return false;
  std::vector<i64> d = smith_diagonal(a);
  return std::all_of(d.begin(), d.end(), [](i64 v) { return v == 1; });
}

std::optional<std::vector<i64>> solve_integer(const IntMatrix& a, const std::vector<i64>& b) {
  if (b.size() != a.rows) fail_internal("solve_integer shape mismatch");
  IntMatrix work = a;
  std::vector<i64> rhs = b;
  IntMatrix v = IntMatrix::identity(a.cols);
  diagonalize(work, &rhs, &v);

  const std::size_t steps = std::min(a.rows, a.cols);
  std::vector<i64> z(a.cols, 0);
  for (std::size_t k = 0; k < steps; ++k) {
    i64 d = work.at(k, k);
    if (d == 0) {
      if (rhs[k] != 0) return std::nullopt;
    } else {
      if (rhs[k] % d != 0) return std::nullopt;
      z[k] = rhs[k] / d;
    }
  }
  for (std::size_t i = steps; i < a.rows; ++i)
    if (rhs[i] != 0) return std::nullopt;

  std::vector<i64> x(a.cols, 0);
  for (std::size_t i = 0; i < a.cols; ++i) {
    i64 acc = 0;
    for (std::size_t j = 0; j < a.cols; ++j)
      if (z[j] != 0) acc = checked_add(acc, checked_mul(v.at(i, j), z[j]));
    x[i] = acc;
  }
  return x;
}

}  // namespace frobtwist
