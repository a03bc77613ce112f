#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "toriccode/finite_field.hpp"

namespace toric {

/// Dense row-major matrix over GF(q).
class GfMatrix {
 public:
  GfMatrix() = default;
  GfMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const FieldElement> r);
  void truncate_rows(std::size_t rows);

  friend bool operator==(const GfMatrix&, const GfMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

/// In-place reduced row-echelon form with first-nonzero pivoting; zero rows
/// are dropped. Returns the pivot column of each remaining row.
std::vector<std::size_t> rref(GfMatrix& m, const FiniteField& f);

/// Rank; stops early once the rank reaches the column count.
std::size_t rank(GfMatrix m, const FiniteField& f);

/// dst += factor * src
void axpy(std::span<FieldElement> dst, FieldElement factor, std::span<const FieldElement> src,
          const FiniteField& f);

std::size_t hamming_weight(std::span<const FieldElement> v);

}  // namespace toric
