#include "toriccode/intlattice.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "toriccode/error.hpp"

namespace toric {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in exact elimination");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in exact elimination");
  return r;
}

std::int64_t checked_abs(std::int64_t a) {
  if (a == INT64_MIN) throw ArithmeticOverflow("integer overflow in exact elimination");
  return a < 0 ? -a : a;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] -= f * row[src]
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t f) {
  if (f == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) = checked_sub(m(dst, c), checked_mul(f, m(src, c)));
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t f) {
  if (f == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) = checked_sub(m(r, dst), checked_mul(f, m(r, src)));
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = checked_sub(0, m(r, c));
}

}  // namespace

int rank_rational(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::int64_t prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    swap_rows(m, piv, rank);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        const std::int64_t num = checked_sub(checked_mul(m(rank, c), m(r, j)), checked_mul(m(r, c), m(rank, j)));
        m(r, j) = num / prev;  // exact by Sylvester's identity
      }
      m(r, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return static_cast<int>(rank);
}

SnfResult smith_normal_form(const IntMatrix& input, bool retain_transforms) {
  IntMatrix a = input;
  const std::size_t rows = a.rows(), cols = a.cols();
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  std::size_t t = 0;
  for (; t < rows && t < cols; ++t) {
    while (true) {
      // Smallest nonzero |entry| in the trailing block, first in row-major order.
      std::size_t pr = rows, pc = cols;
      std::int64_t best = 0;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          const std::int64_t x = checked_abs(a(r, c));
          if (x != 0 && (best == 0 || x < best)) {
            best = x;
            pr = r;
            pc = c;
          }
        }
      }
      if (best == 0) goto done;
      swap_rows(a, t, pr);
      swap_rows(u, t, pr);
      swap_cols(a, t, pc);
      swap_cols(v, t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const std::int64_t f = a(r, t) / a(t, t);
        row_axpy(a, r, t, f);
        row_axpy(u, r, t, f);
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const std::int64_t f = a(t, c) / a(t, t);
        col_axpy(a, c, t, f);
        col_axpy(v, c, t, f);
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (a(r, c) % a(t, t) != 0) {
            row_axpy(a, t, r, -1);
            row_axpy(u, t, r, -1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(u, t);
    }
  }
done:
  SnfResult res;
  for (std::size_t i = 0; i < rows && i < cols; ++i) {
    if (a(i, i) != 0) res.invariant_factors.push_back(a(i, i));
  }
  res.rank = static_cast<int>(res.invariant_factors.size());
  res.diagonal = std::move(a);
  if (retain_transforms) res.transforms = SnfTransforms{std::move(u), std::move(v)};
  return res;
}

IntMatrix difference_lattice(const std::vector<std::vector<std::int64_t>>& vectors) {
  if (vectors.empty()) return {};
  const std::size_t n = vectors.front().size();
  IntMatrix rel(vectors.size() - 1, n);
  for (std::size_t i = 1; i < vectors.size(); ++i)
    for (std::size_t c = 0; c < n; ++c) rel(i - 1, c) = checked_sub(vectors[i][c], vectors[0][c]);
  return rel;
}

bool phi_injective(const IntMatrix& relations, std::int64_t q) {
  if (q < 3) throw InputError("the torsion test needs q >= 3");
  const SnfResult snf = smith_normal_form(relations);
  for (std::int64_t d : snf.invariant_factors) {
    if (std::gcd(q - 1, d) != 1) return false;
  }
  return true;
}

bool phi_injective(const Clutter& c, std::int64_t q) {
  return phi_injective(difference_lattice(c.vectors()), q);
}

CiReport ci_classify(const Clutter& c, std::int64_t q) {
  if (q < 3) throw InputError("the complete-intersection classifier needs q >= 3");
  CiReport rep;
  rep.rank = rank_rational(incidence(c));
  rep.vectors_independent = rep.rank == c.num_edges();
  const SnfResult snf = smith_normal_form(difference_lattice(c.vectors()));
  rep.phi_injective = true;
  for (std::int64_t d : snf.invariant_factors) {
    if (d > 1) rep.torsion.push_back(d);
    if (std::gcd(q - 1, d) != 1) rep.phi_injective = false;
  }
  const Uniformity uni = uniformity(c);
  if (!uni.uniform) {
    rep.applicable = false;
    rep.is_ci = false;
    rep.reason = "clutter is not uniform; no linear-algebra verdict is claimed";
    return rep;
  }
  rep.applicable = true;
  rep.is_ci = rep.vectors_independent && rep.phi_injective;
  if (rep.is_ci) {
    rep.reason = "characteristic vectors are independent and multiplication by q-1 is injective on Z^n/L";
  } else if (!rep.vectors_independent) {
    rep.reason = "characteristic vectors are linearly dependent (rank " + std::to_string(rep.rank) + " < s = " +
                 std::to_string(c.num_edges()) + ")";
  } else {
    rep.reason = "multiplication by q-1 is not injective on Z^n/L (torsion shares a factor with q-1)";
  }
  return rep;
}

}  // namespace toric
