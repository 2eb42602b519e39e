#ifndef NILORB_INT_MATRIX_HPP
#define NILORB_INT_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "nilorb/bigint.hpp"

namespace nilorb {

/// Dense square matrix over arbitrary-precision integers. Indices are 0-based
/// in operator(); unit() takes the 1-based E_{i,j} convention.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static IntMatrix identity(std::size_t dim);
  /// E_{i,j}: a one in row i, column j (1-based).
  static IntMatrix unit(std::size_t dim, std::size_t i, std::size_t j);

  std::size_t dim() const noexcept { return dim_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  /// this += v * E_{i,j} (1-based).
  IntMatrix& add_unit(std::size_t i, std::size_t j, int v = 1);

  bool is_zero() const;
  bool is_strictly_upper_triangular() const;

  /// Rebuild with rows and columns relabeled: out(p[r], p[c]) = in(r, c), p 0-based.
  IntMatrix permuted(const std::vector<std::size_t>& p) const;

  /// Nonzero entries as "E_{1,2} - E_{6,5} + ..." in 1-based notation.
  std::string to_unit_sum() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b);
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<BigInt> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t exact_rank(const IntMatrix& m);

}  // namespace nilorb

#endif  // NILORB_INT_MATRIX_HPP
