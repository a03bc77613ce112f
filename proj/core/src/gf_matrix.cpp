#include "toriccode/gf_matrix.hpp"

#include <algorithm>

#include "toriccode/error.hpp"

namespace toric {

void GfMatrix::append_row(std::span<const FieldElement> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw InputError("row length does not match the matrix");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void GfMatrix::truncate_rows(std::size_t rows) {
  rows_ = std::min(rows_, rows);
  data_.resize(rows_ * cols_);
}

void axpy(std::span<FieldElement> dst, FieldElement factor, std::span<const FieldElement> src,
          const FiniteField& f) {
  if (factor.is_zero()) return;
  if (factor == f.one()) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = f.add(dst[i], src[i]);
    return;
  }
  for (std::size_t i = 0; i < dst.size(); ++i) {
    if (!src[i].is_zero()) dst[i] = f.add(dst[i], f.mul(factor, src[i]));
  }
}

std::vector<std::size_t> rref(GfMatrix& m, const FiniteField& f) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
    const FieldElement scale = f.inv(m(r, c));
    for (auto& x : m.row(r)) x = f.mul(x, scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r && !m(i, c).is_zero()) axpy(m.row(i), f.neg(m(i, c)), m.row(r), f);
    }
    pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  return pivots;
}

std::size_t rank(GfMatrix m, const FiniteField& f) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
    const FieldElement inv = f.inv(m(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (!m(i, c).is_zero()) axpy(m.row(i).subspan(c), f.neg(f.mul(m(i, c), inv)), m.row(r).subspan(c), f);
    }
    ++r;
  }
  return r;
}

std::size_t hamming_weight(std::span<const FieldElement> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](FieldElement a) { return !a.is_zero(); }));
}

}  // namespace toric
