#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace frobtwist {

using i64 = std::int64_t;

// Overflow-checked arithmetic. All exact linear algebra in this library goes
// through these; an overflow raises ErrorKind::internal instead of wrapping.
i64 checked_add(i64 a, i64 b);
i64 checked_sub(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<i64> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  i64& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  i64 at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  bool is_zero() const;
  bool operator==(const IntMatrix&) const = default;

  static IntMatrix identity(std::size_t n);
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

// Kronecker product with the first factor varying slowest: row index of the
// result is i_a * b.rows + i_b.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

// Diagonal entries (absolute values, zeros included) of a diagonalization of
// `a` by unimodular row/column operations. No divisibility chain is enforced.
std::vector<i64> smith_diagonal(IntMatrix a);

// Invariant factors d1 | d2 | ... of `a`, positive, zeros dropped.
std::vector<i64> invariant_factors(const IntMatrix& a);

std::size_t integer_rank(const IntMatrix& a);

// Square and invertible over the integers (all invariant factors 1).
bool is_unimodular(const IntMatrix& a);

// Some integral solution of a·x = b, or nullopt if none exists. Decided via
// Smith normal form; rational solvability alone is not enough.
std::optional<std::vector<i64>> solve_integer(const IntMatrix& a,
                                              const std::vector<i64>& b);

}  // namespace frobtwist
