#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace epow {

/// Dense GF(2) matrix with bit-packed rows.
class Gf2Matrix {
public:
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set(std::size_t r, std::size_t c);
  bool get(std::size_t r, std::size_t c) const;

  /// Rank by Gaussian elimination; destroys the matrix contents.
  std::size_t rank();

private:
  std::size_t rows_, cols_, words_;
  std::vector<std::uint64_t> data_;
};

} // namespace epow
