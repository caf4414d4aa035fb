#include "epow/gf2.hpp"

#include <bit>

namespace epow {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      data_(rows * words_, 0) {}

void Gf2Matrix::set(std::size_t r, std::size_t c) {
  data_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  return data_[r * words_ + c / 64] >> (c % 64) & 1;
}

std::size_t Gf2Matrix::rank() {
  if (rows_ == 0 || cols_ == 0) return 0;
  // (leading column, row index) of each pivot found so far.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t* row = &data_[r * words_];
    for (auto [pc, pr] : pivots) {
      if (row[pc / 64] >> (pc % 64) & 1) {
        const std::uint64_t* prow = &data_[pr * words_];
        for (std::size_t w = pc / 64; w < words_; ++w) row[w] ^= prow[w];
      }
    }
    for (std::size_t w = 0; w < words_; ++w) {
      if (row[w]) {
        pivots.emplace_back(w * 64 + std::countr_zero(row[w]), r);
        break;
      }
    }
  }
  return pivots.size();
}

} // namespace epow
