#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toriccode/clutter.hpp"
#include "toriccode/int_matrix.hpp"

namespace toric {

/// Rank over Q, by fraction-free (Bareiss) elimination with overflow checks.
int rank_rational(const IntMatrix& m);

struct SnfTransforms {
  IntMatrix left;   // U, unimodular
  IntMatrix right;  // V, unimodular
};

/// Smith normal form: D = U * M * V with D diagonal, equivalently
/// M = U^{-1} D V^{-1}. Only the nonzero diagonal entries are kept.
struct SnfResult {
  std::vector<std::int64_t> invariant_factors;  // d_1 | d_2 | ... | d_r, all >= 1
  int rank = 0;
  IntMatrix diagonal;  // same shape as the input
  std::optional<SnfTransforms> transforms;
};

/// Pivots on the smallest nonzero absolute value (ties: first in row-major
/// order). Throws ArithmeticOverflow instead of wrapping.
SnfResult smith_normal_form(const IntMatrix& m, bool retain_transforms = false);

/// Rows v_i - v_1, i = 2..s: generators of L = Z{v_i - v_1}.
IntMatrix difference_lattice(const std::vector<std::vector<std::int64_t>>& vectors);

/// Whether multiplication by q-1 is injective on Z^n / rowspace(relations).
bool phi_injective(const IntMatrix& relations, std::int64_t q);
bool phi_injective(const Clutter& c, std::int64_t q);

struct CiReport {
  bool applicable = false;
  bool is_ci = false;
  bool vectors_independent = false;
  bool phi_injective = false;
  int rank = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1 of Z^n / L
  std::string reason;
};

/// Complete-intersection verdict for uniform clutters via linear algebra.
/// For non-uniform clutters the verdict is not claimed (applicable = false).
CiReport ci_classify(const Clutter& c, std::int64_t q);

}  // namespace toric
