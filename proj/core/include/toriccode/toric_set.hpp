#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "toriccode/clutter.hpp"
#include "toriccode/finite_field.hpp"

namespace toric {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// A point of P^{s-1} in canonical form: first nonzero coordinate is 1.
struct ProjectivePoint {
  std::vector<FieldElement> coords;

  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// Scales a nonzero vector so its first nonzero coordinate is 1.
ProjectivePoint canonicalize(const FiniteField& f, std::vector<FieldElement> coords);

/// kClutter and kTorus sets are subgroups of the torus by construction;
/// kPoints is an arbitrary set of unit points.
enum class ToricSource { kClutter, kTorus, kPoints };

/// A set of projective points whose coordinates are all units, stored as
/// primitive-power indices (coordinate = primitive^index). Canonical
/// representatives have index 0 in the first coordinate. Points are sorted
/// lexicographically by index vector and pairwise distinct.
class ToricSet {
 public:
  /// Normalizes each point to index 0 in the first coordinate, then sorts and
  /// removes duplicates.
  ToricSet(FiniteField field, int s, ToricSource source, std::vector<std::uint32_t> flat_indices);

  const FiniteField& field() const { return field_; }
  int s() const { return s_; }
  ToricSource source() const { return source_; }
  bool is_group() const { return source_ != ToricSource::kPoints; }
  std::size_t size() const { return count_; }

  /// Primitive-power indices of point i's coordinates.
  std::span<const std::uint32_t> indices(std::size_t i) const {
    return {flat_.data() + i * s_, static_cast<std::size_t>(s_)};
  }
  ProjectivePoint point(std::size_t i) const;
  bool contains(std::span<const std::uint32_t> indices) const;

  /// CSV dump: one row per point, coordinate g^i written as i+1 (0 would
  /// denote the zero element, which never occurs here).
  void write_csv(std::ostream& os) const;

  friend bool operator==(const ToricSet& a, const ToricSet& b) {
    return a.s_ == b.s_ && a.field_ == b.field_ && a.flat_ == b.flat_;
  }

 private:
  FiniteField field_;
  int s_;
  ToricSource source_;
  std::size_t count_;
  std::vector<std::uint32_t> flat_;
};

struct EnumerationOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned threads = 1;
};

/// Number of unit tuples (q-1)^n walked by enumerate_x, saturating at
/// UINT64_MAX.
std::uint64_t enumeration_cost(const Clutter& c, const FiniteField& f);

/// X = {[y^{v_1}, ..., y^{v_s}] : y in (K^*)^n}, by walking every tuple.
/// Throws BudgetExceeded when (q-1)^n exceeds the budget.
ToricSet enumerate_x(const Clutter& c, const FiniteField& f, const EnumerationOptions& opts = {});

/// All (q-1)^{s-1} points of P^{s-1} with unit coordinates.
ToricSet projective_torus(int s, const FiniteField& f);

bool equals_torus(const ToricSet& x);

/// Checks the degree claim |X| = (q-1)^{n-1} for clutters whose incidence
/// matrix has full row rank n. Normality of the edge ideal is the caller's
/// assertion; it is not verified here.
struct ToricProfile {
  std::size_t size = 0;
  int n = 0;
  int s = 0;
  int rank = 0;
  bool full_rank = false;
  bool uniform = false;
  std::uint64_t torus_degree = 0;  // (q-1)^{n-1}
  bool degree_matches = false;     // meaningful only when full_rank
  std::string note;
};
ToricProfile profile(const Clutter& c, const FiniteField& f, const EnumerationOptions& opts = {});
ToricProfile profile(const Clutter& c, const ToricSet& x);

/// Point indices whose products generate the group X, chosen greedily in
/// point order. Throws InputError if X is not a group.
std::vector<std::size_t> generators(const ToricSet& x);

/// Coordinatewise product of two points of X, renormalized.
std::vector<std::uint32_t> multiply_points(const ToricSet& x, std::size_t a, std::size_t b);

}  // namespace toric
