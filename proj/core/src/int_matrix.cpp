#include "nilorb/int_matrix.hpp"

#include <utility>

#include "nilorb/error.hpp"

namespace nilorb {

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::unit(std::size_t dim, std::size_t i, std::size_t j) {
  IntMatrix m(dim);
  m.add_unit(i, j);
  return m;
}

IntMatrix& IntMatrix::add_unit(std::size_t i, std::size_t j, int v) {
  if (i < 1 || i > dim_ || j < 1 || j > dim_) {
    throw InputError("E_{" + std::to_string(i) + "," + std::to_string(j) + "} outside " +
                     std::to_string(dim_) + "x" + std::to_string(dim_) + " matrix");
  }
  (*this)(i - 1, j - 1) += v;
  return *this;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

bool IntMatrix::is_strictly_upper_triangular() const {
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c <= r; ++c) {
      if ((*this)(r, c) != 0) return false;
    }
  }
  return true;
}

IntMatrix IntMatrix::permuted(const std::vector<std::size_t>& p) const {
  if (p.size() != dim_) throw InputError("relabeling size does not match matrix");
  IntMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(p[r], p[c]) = (*this)(r, c);
  }
  return out;
}

std::string IntMatrix::to_unit_sum() const {
  std::string s;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      const BigInt& x = (*this)(r, c);
      if (x == 0) continue;
      const bool neg = x < 0;
      BigInt mag = neg ? BigInt(-x) : x;
      if (s.empty()) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      if (mag != 1) s += mag.str();
      s += "E_{" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "}";
    }
  }
  return s.empty() ? "0" : s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw InputError("matrix dimension mismatch");
  const std::size_t n = a.dim_;
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw InputError("matrix dimension mismatch");
  for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
  return a;
}

IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw InputError("matrix dimension mismatch");
  for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
  return a;
}

std::size_t exact_rank(const IntMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);
  }

  // Bareiss: after step k every entry below the pivot rows is an integer
  // minor, and the division by the previous pivot is exact.
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < n; ++r) {
      for (std::size_t c = col + 1; c < n; ++c) {
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace nilorb
