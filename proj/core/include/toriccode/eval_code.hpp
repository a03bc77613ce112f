#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toriccode/gf_matrix.hpp"
#include "toriccode/monomial.hpp"
#include "toriccode/toric_set.hpp"

namespace toric {

/// A linear code given by a generator matrix in reduced row-echelon form.
struct LinearCode {
  FiniteField field;
  GfMatrix generator;  // dimension x length, RREF
  std::size_t length = 0;
  std::size_t dimension = 0;
  int order = 0;  // the degree d of the evaluated forms, 0 if not an evaluation code
  std::string provenance;

  /// Builds the code spanned by arbitrary rows; reduces them first.
  static LinearCode from_rows(FiniteField field, GfMatrix rows, std::string provenance = {});
};

/// Primitive-power index of t^a at every point of X.
std::vector<std::uint32_t> evaluation_indices(const ToricSet& x, const Monomial& a);

/// Rows: monomials(s, d) in descending revlex order; columns: points of X.
/// Points are canonical with first coordinate 1, so the normalization by
/// t_1^d is already absorbed.
GfMatrix evaluation_matrix(const ToricSet& x, int d);

/// C_X(d), the image of the degree-d evaluation map.
LinearCode code(const ToricSet& x, int d);

/// dim_K (S/I(X))_d.
std::size_t hilbert_function(const ToricSet& x, int d);

/// H_X(0), ..., H_X(reg): stops at the first degree where H_X reaches |X|.
std::vector<std::size_t> hilbert_until_regularity(const ToricSet& x);

/// Least d with H_X(d) = |X|.
int regularity(const ToricSet& x);

/// h_0, ..., h_reg with h_i = H_X(i) - H_X(i-1); sums to |X|.
std::vector<std::size_t> h_vector(const ToricSet& x);

/// |X| - H_X(d) + 1.
std::size_t singleton_bound(const ToricSet& x, int d);

}  // namespace toric
