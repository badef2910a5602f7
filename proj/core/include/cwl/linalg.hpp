#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cwl {

/// Dense integer matrix, row-major. Only what exact rank computations need.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<std::int64_t>& data() const noexcept { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination. Runs in 64-bit
/// integers with 128-bit intermediates and falls back to arbitrary
/// precision if any minor leaves the 64-bit range.
std::size_t rank_over_rationals(const IntMatrix& m);

/// The arbitrary-precision path alone, exposed for cross-checking.
std::size_t rank_over_rationals_bigint(const IntMatrix& m);

}  // namespace cwl
