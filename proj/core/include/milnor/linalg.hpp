#pragma once

// Dense linear algebra over F_l, sized for kernel computations on one bidegree.

#include <cstddef>
#include <vector>

#include "milnor/ring.hpp"

namespace milnor {

using Vector = std::vector<Coeff>;

/// Row-major matrix over F_l.
class Matrix {
public:
  Matrix(const RingContext& ctx, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Coeff& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
  Coeff at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }
  const RingContext& context() const noexcept { return ctx_; }

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();

  Vector apply(const Vector& v) const;

private:
  RingContext ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Coeff> data_;
};

struct KernelResult {
  std::size_t rank = 0;
  /// Basis of the null space, one vector per free column, in column order.
  std::vector<Vector> kernel;
};

KernelResult kernel(Matrix m);

} // namespace milnor
