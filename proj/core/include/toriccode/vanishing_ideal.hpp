#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toriccode/clutter.hpp"
#include "toriccode/finite_field.hpp"
#include "toriccode/monomial.hpp"
#include "toriccode/toric_set.hpp"

namespace toric {

struct Term {
  Monomial monomial;
  FieldElement coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Homogeneous polynomial; terms sorted in descending revlex order, no zero
/// coefficients.
struct HomogPoly {
  std::vector<Term> terms;

  const Term& leading() const { return terms.front(); }
  std::uint32_t degree() const { return terms.empty() ? 0 : terms.front().monomial.degree(); }
  /// Value at a point given by primitive-power indices of its coordinates.
  FieldElement evaluate(const FiniteField& f, std::span<const std::uint32_t> point) const;
  /// "t1^2 - t3^2".
  std::string to_string(const FiniteField& f) const;

  friend bool operator==(const HomogPoly&, const HomogPoly&) = default;
};

/// Reduced Groebner basis under revlex (t_1 > ... > t_s), sorted by leading
/// term in ascending degree, then descending revlex.
struct ReducedGB {
  int s = 0;
  std::vector<HomogPoly> elements;

  std::vector<Monomial> leading_terms() const;
};

enum class GbStrategy {
  /// Characters when X is a group, elimination otherwise.
  kAuto,
  /// Incremental row reduction of evaluation vectors with recorded
  /// combinations; valid for any point set.
  kElimination,
  /// Monomials restricted to a multiplicative group X are characters of X,
  /// and distinct characters are linearly independent, so a dependency
  /// arises exactly when two monomials share an evaluation vector.
  kCharacter,
};

struct GbOptions {
  GbStrategy strategy = GbStrategy::kAuto;
};

/// Degree-by-degree interpolation over the points of X: within each degree,
/// candidates (products t_i * standard monomial of the previous degree that
/// no known leading term divides) are visited in ascending revlex order; a
/// candidate whose evaluation vector depends on those of smaller standard
/// monomials becomes a leading term. Stops one degree past the first degree
/// where the standard monomials number |X|.
ReducedGB interpolate_gb(const ToricSet& x, const GbOptions& opts = {});

int degree_complexity(const ReducedGB& g);

/// Number of degree-d monomials outside the leading-term ideal.
std::uint64_t standard_monomial_count(const ReducedGB& g, int d);

/// Reducedness: monic, and no leading term divides any other stored term.
bool is_reduced(const ReducedGB& g);

struct GbStructureReport {
  bool pure_powers_present = false;  // t_i^{q-1} - t_s^{q-1} for all i < s
  bool degree_cap_ok = false;        // deg_{t_i}(g) <= q-1 everywhere
  bool binomials_disjoint_ok = false;
  std::vector<std::string> failures;

  bool all_passed() const { return pure_powers_present && degree_cap_ok && binomials_disjoint_ok; }
};
GbStructureReport verify_gb_structure(const ReducedGB& g, const FiniteField& f);

/// The pure-power binomials t_i^{q-1} - t_s^{q-1}, i < s.
std::vector<HomogPoly> torus_binomials(int s, const FiniteField& f);

/// Membership of t^{a+} - t^{a-} in I(X) by the lattice criterion:
/// |a+| = |a-| and A a+ = A a- mod (q-1). Throws if the supports overlap.
bool binomial_in_ix(std::span<const std::uint32_t> a_plus, std::span<const std::uint32_t> a_minus,
                    const Clutter& c, std::int64_t q);

/// Ground truth: t^{a+} - t^{a-} vanishes at every point of X.
bool binomial_vanishes(std::span<const std::uint32_t> a_plus, std::span<const std::uint32_t> a_minus,
                       const ToricSet& x);

inline constexpr std::uint64_t kDefaultMonomialBudget = 20'000'000;

/// dim_K (S/I_A)_d: the number of distinct sums A a over a in N^s, |a| = d.
std::uint64_t hilbert_ia(const Clutter& c, int d, std::uint64_t budget = kDefaultMonomialBudget);

}  // namespace toric
