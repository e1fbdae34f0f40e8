#include "milnor/linalg.hpp"

#include <utility>

namespace milnor {

Matrix::Matrix(const RingContext& ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && at(p, col) == 0)
      ++p;
    if (p == rows_)
      continue;
    if (p != row)
      for (std::size_t c = 0; c < cols_; ++c)
        std::swap(at(p, c), at(row, c));
    const Coeff inv = ctx_.inverse(at(row, col));
    for (std::size_t c = col; c < cols_; ++c)
      at(row, c) = ctx_.mul(at(row, c), inv);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || at(r, col) == 0)
        continue;
      const Coeff f = at(r, col);
      for (std::size_t c = col; c < cols_; ++c)
        at(r, c) = ctx_.sub(at(r, c), ctx_.mul(f, at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Vector Matrix::apply(const Vector& v) const {
  Vector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out[r] = ctx_.add(out[r], ctx_.mul(at(r, c), v.at(c)));
  return out;
}

KernelResult kernel(Matrix m) {
  const auto& ctx = m.context();
  const auto pivots = m.rref();
  KernelResult result;
  result.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = ctx.neg(m.at(r, free));
    result.kernel.push_back(std::move(v));
  }
  return result;
}

} // namespace milnor
