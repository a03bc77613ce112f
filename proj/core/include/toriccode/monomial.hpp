#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace toric {

/// t_1^{a_1} ... t_s^{a_s}.
struct Monomial {
  std::vector<std::uint32_t> exponents;

  std::uint32_t degree() const;
  bool divides(const Monomial& other) const;
  /// "t1^2*t3", or "1" for the empty product.
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Reverse lexicographic order with t_1 > t_2 > ... > t_s: a > b iff the last
/// nonzero entry of a - b is negative. Monomials of different degree compare
/// by degree first.
bool revlex_greater(const Monomial& a, const Monomial& b);

struct RevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return revlex_greater(a, b); }
};

/// All C(s+d-1, d) monomials of degree d in s variables, in descending revlex
/// order.
std::vector<Monomial> monomials(int s, int d);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace toric
