#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace toric {

inline constexpr std::uint64_t kDefaultCardinalityCap = std::uint64_t{1} << 16;

/// An element of GF(p^k), stored as the base-p integer c_0 + c_1 p + ... +
/// c_{k-1} p^{k-1} of its coordinates in the power basis of the modulus.
/// Elements carry no reference to their field; every operation takes the
/// field as context.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t code) : code_(code) {}

  constexpr std::uint32_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint32_t code_ = 0;
};

enum class ArithOp { kAdd, kSub, kMul, kDiv, kPow };

/// GF(p^k) with exact table-driven arithmetic.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree k (coefficients compared from the constant term up) and the
/// primitive element is the first element, in code order, of multiplicative
/// order q - 1. Unit i in `units()` is primitive^i, so `log`/`exp` translate
/// between units and their primitive-power indices.
///
/// Copies are cheap: the tables are shared and immutable.
class FiniteField {
 public:
  static FiniteField make(std::uint32_t p, std::uint32_t k,
                          std::uint64_t cardinality_cap = kDefaultCardinalityCap);
  /// Factors q as a prime power; throws InputError otherwise.
  static FiniteField from_order(std::uint64_t q,
                                std::uint64_t cardinality_cap = kDefaultCardinalityCap);

  std::uint32_t p() const { return t_->p; }
  std::uint32_t k() const { return t_->k; }
  std::uint32_t q() const { return t_->q; }
  /// q - 1, the order of the unit group.
  std::uint32_t group_order() const { return t_->q - 1; }
  /// Modulus coefficients, constant term first, leading 1 included.
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }
  FieldElement primitive() const { return FieldElement(t_->exp[1]); }

  FieldElement zero() const { return FieldElement(0); }
  FieldElement one() const { return FieldElement(1); }
  /// Embeds an integer through GF(p).
  FieldElement from_int(std::int64_t value) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement a) const;
  bool contains(FieldElement a) const { return a.code() < t_->q; }

  // Unchecked hot-path operations; operands must belong to this field.
  FieldElement add(FieldElement a, FieldElement b) const {
    if (t_->add_table.empty()) return add_slow(a, b);
    return FieldElement(t_->add_table[a.code() * t_->q + b.code()]);
  }
  FieldElement neg(FieldElement a) const { return FieldElement(t_->neg[a.code()]); }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero()) return FieldElement(0);
    return FieldElement(t_->exp[t_->log[a.code()] + t_->log[b.code()]]);
  }
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  /// Negative exponents mean inverse powers; 0^0 = 1.
  FieldElement pow(FieldElement a, std::int64_t e) const;

  /// Checked arithmetic: validates membership and division by zero.
  FieldElement arith(ArithOp op, FieldElement a, FieldElement b) const;
  FieldElement arith(ArithOp op, FieldElement a, std::int64_t exponent) const;

  /// Discrete log base `primitive()`; a must be nonzero.
  std::uint32_t log(FieldElement a) const { return t_->log[a.code()]; }
  /// primitive^i for any i >= 0.
  FieldElement exp(std::uint64_t i) const {
    return FieldElement(t_->exp[i % (t_->q - 1)]);
  }

  /// primitive^0, primitive^1, ..., primitive^(q-2).
  std::vector<FieldElement> units() const;

  /// "3" for prime fields, "a^5" (a = primitive) otherwise; "0"/"1" always.
  std::string format(FieldElement a) const;
  std::string describe() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.t_ == b.t_ || (a.p() == b.p() && a.k() == b.k());
  }

 private:
  struct Tables {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<std::uint32_t> exp;  // length 2(q-1) so log sums index directly
    std::vector<std::uint32_t> neg;
    std::vector<std::uint32_t> add_table;  // q*q, only for small q
  };

  explicit FiniteField(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  FieldElement add_slow(FieldElement a, FieldElement b) const;

  std::shared_ptr<const Tables> t_;
};

bool is_prime(std::uint64_t n);

}  // namespace toric
