#include "toriccode/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "toriccode/error.hpp"

namespace toric {

std::uint32_t Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), std::uint32_t{0});
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "t" + std::to_string(i + 1);
    if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

bool revlex_greater(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = a.exponents.size(); i-- > 0;) {
    if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i];
  }
  return false;
}

std::vector<Monomial> monomials(int s, int d) {
  if (s < 1 || d < 0) throw InputError("monomials need s >= 1 and d >= 0");
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(s, 0);
  // Recursive fill over the last variable first so the list comes out in
  // descending revlex order without sorting.
  auto rec = [&](auto&& self, int var, std::uint32_t left) -> void {
    if (var == 0) {
      e[0] = left;
      out.push_back(Monomial{e});
      return;
    }
    for (std::uint32_t x = 0; x <= left; ++x) {
      e[var] = x;
      self(self, var - 1, left - x);
    }
    e[var] = 0;
  };
  rec(rec, s - 1, static_cast<std::uint32_t>(d));
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(r, n - k + i, &next)) return UINT64_MAX;
    r = next / i;
  }
  return r;
}

}  // namespace toric
