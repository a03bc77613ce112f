#include "toriccode/finite_field.hpp"

#include <sstream>

#include "toriccode/error.hpp"

namespace toric {
namespace {

using Poly = std::vector<std::uint32_t>;  // low -> high

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime and small; Fermat.
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo a monic-or-not nonzero divisor.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t f = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - f * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), m, p);
}

Poly digits(std::uint64_t code, std::uint32_t p, std::uint32_t k) {
  Poly c(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    c[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return c;
}

std::uint32_t encode(const Poly& c, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return static_cast<std::uint32_t>(code);
}

// True if the monic polynomial m of degree k has no monic factor of degree
// 1..k/2 over GF(p).
bool irreducible(const Poly& m, std::uint32_t p) {
  const std::size_t k = m.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly f = digits(c, p, static_cast<std::uint32_t>(d));
      f.push_back(1);
      if (poly_mod(m, f, p).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t k) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    // c_0 is the most significant digit of idx: lexicographic from the
    // constant term up.
    Poly m(k + 1, 0);
    std::uint64_t rest = idx;
    for (std::uint32_t i = k; i-- > 0;) {
      m[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    m[k] = 1;
    if (irreducible(m, p)) return m;
  }
  throw Error("no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t k,
                              std::uint64_t cardinality_cap) {
  if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw InputError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > cardinality_cap || q > (std::uint64_t{1} << 31)) {
      throw InputError("field cardinality " + std::to_string(p) + "^" + std::to_string(k) +
                       " exceeds the cap " + std::to_string(cardinality_cap));
    }
  }
  if (q < 3) throw InputError("q = 2 is not supported (the field needs q >= 3)");

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->k = k;
  t->q = static_cast<std::uint32_t>(q);
  t->modulus = smallest_irreducible(p, k);
  const std::uint32_t order = t->q - 1;

  // Primitive element: first code whose powers run through every unit.
  std::vector<std::uint32_t> powers;
  for (std::uint32_t cand = 1; cand < t->q; ++cand) {
    const Poly g = digits(cand, p, k);
    Poly acc = {1};
    powers.assign(1, 1);
    bool primitive = true;
    for (std::uint32_t i = 1; i < order; ++i) {
      acc = poly_mulmod(acc, g, t->modulus, p);
      Poly full = acc;
      full.resize(k, 0);
      const std::uint32_t code = encode(full, p);
      if (code == 1) {
        primitive = false;
        break;
      }
      powers.push_back(code);
    }
    if (primitive) break;
  }

  t->log.assign(t->q, 0);
  t->exp.assign(2 * std::size_t{order}, 0);
  for (std::uint32_t i = 0; i < order; ++i) {
    t->exp[i] = powers[i];
    t->exp[i + order] = powers[i];
    t->log[powers[i]] = i;
  }

  t->neg.assign(t->q, 0);
  for (std::uint32_t a = 0; a < t->q; ++a) {
    Poly c = digits(a, p, k);
    for (auto& x : c) x = (p - x) % p;
    t->neg[a] = encode(c, p);
  }

  if (t->q <= 256) {
    t->add_table.assign(std::size_t{t->q} * t->q, 0);
    for (std::uint32_t a = 0; a < t->q; ++a) {
      const Poly ca = digits(a, p, k);
      for (std::uint32_t b = 0; b < t->q; ++b) {
        Poly cb = digits(b, p, k);
        for (std::uint32_t i = 0; i < k; ++i) cb[i] = (ca[i] + cb[i]) % p;
        t->add_table[std::size_t{a} * t->q + b] = encode(cb, p);
      }
    }
  }
  return FiniteField(std::move(t));
}

FiniteField FiniteField::from_order(std::uint64_t q, std::uint64_t cardinality_cap) {
  if (q < 2) throw InputError("q = " + std::to_string(q) + " is not a prime power");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::uint32_t k = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw InputError("q = " + std::to_string(q) + " is not a prime power");
  if (p > (std::uint64_t{1} << 31)) throw InputError("q exceeds the cardinality cap");
  return make(static_cast<std::uint32_t>(p), k, cardinality_cap);
}

FieldElement FiniteField::from_int(std::int64_t value) const {
  const std::int64_t p = t_->p;
  return FieldElement(static_cast<std::uint32_t>(((value % p) + p) % p));
}

FieldElement FiniteField::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > t_->k) throw InputError("too many coordinates for GF(" + std::to_string(t_->q) + ")");
  Poly c(coeffs.begin(), coeffs.end());
  for (auto x : c) {
    if (x >= t_->p) throw InputError("coordinate out of range [0, p)");
  }
  c.resize(t_->k, 0);
  return FieldElement(encode(c, t_->p));
}

std::vector<std::uint32_t> FiniteField::coeffs(FieldElement a) const {
  return digits(a.code(), t_->p, t_->k);
}

FieldElement FiniteField::add_slow(FieldElement a, FieldElement b) const {
  std::uint32_t x = a.code(), y = b.code(), code = 0, place = 1;
  for (std::uint32_t i = 0; i < t_->k; ++i) {
    code += ((x % t_->p + y % t_->p) % t_->p) * place;
    x /= t_->p;
    y /= t_->p;
    place *= t_->p;
  }
  return FieldElement(code);
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a.is_zero()) throw InputError("division by zero in GF(" + std::to_string(t_->q) + ")");
  const std::uint32_t order = t_->q - 1;
  return FieldElement(t_->exp[(order - t_->log[a.code()]) % order]);
}

FieldElement FiniteField::pow(FieldElement a, std::int64_t e) const {
  if (a.is_zero()) {
    if (e == 0) return one();
    if (e < 0) throw InputError("zero raised to a negative power");
    return zero();
  }
  const std::int64_t order = t_->q - 1;
  std::int64_t r = (static_cast<std::int64_t>(t_->log[a.code()]) * (e % order)) % order;
  if (r < 0) r += order;
  return FieldElement(t_->exp[static_cast<std::size_t>(r)]);
}

FieldElement FiniteField::arith(ArithOp op, FieldElement a, FieldElement b) const {
  if (!contains(a) || !contains(b)) {
    throw InputError("operand does not belong to GF(" + std::to_string(t_->q) + ")");
  }
  switch (op) {
    case ArithOp::kAdd: return add(a, b);
    case ArithOp::kSub: return sub(a, b);
    case ArithOp::kMul: return mul(a, b);
    case ArithOp::kDiv: return div(a, b);
    case ArithOp::kPow: return pow(a, static_cast<std::int64_t>(b.code()));
  }
  throw Error("unknown arithmetic operation");
}

FieldElement FiniteField::arith(ArithOp op, FieldElement a, std::int64_t exponent) const {
  if (op != ArithOp::kPow) throw InputError("integer operand is only valid for pow");
  if (!contains(a)) throw InputError("operand does not belong to GF(" + std::to_string(t_->q) + ")");
  return pow(a, exponent);
}

std::vector<FieldElement> FiniteField::units() const {
  std::vector<FieldElement> out;
  out.reserve(t_->q - 1);
  for (std::uint32_t i = 0; i + 1 < t_->q; ++i) out.emplace_back(t_->exp[i]);
  return out;
}

std::string FiniteField::format(FieldElement a) const {
  if (t_->k == 1 || a.code() <= 1) return std::to_string(a.code());
  return "a^" + std::to_string(log(a));
}

std::string FiniteField::describe() const {
  std::ostringstream os;
  os << "GF(" << t_->q << ")";
  if (t_->k > 1) {
    os << " = GF(" << t_->p << ")[x]/(";
    bool first = true;
    for (std::size_t i = t_->modulus.size(); i-- > 0;) {
      const auto c = t_->modulus[i];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0 || c != 1) os << c;
      if (i > 0) os << "x";
      if (i > 1) os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

}  // namespace toric
