#include "toriccode/eval_code.hpp"

#include <set>

#include "toriccode/error.hpp"

namespace toric {
namespace {

// Distinct evaluation rows of the degree-d monomials, as index vectors.
// Identical rows add nothing to the rank, so only one copy is kept.
std::vector<std::vector<std::uint32_t>> distinct_rows(const ToricSet& x, int d) {
  std::set<std::vector<std::uint32_t>> rows;
  for (const auto& m : monomials(x.s(), d)) rows.insert(evaluation_indices(x, m));
  return {rows.begin(), rows.end()};
}

GfMatrix to_matrix(const ToricSet& x, const std::vector<std::vector<std::uint32_t>>& rows) {
  const auto& f = x.field();
  GfMatrix m(rows.size(), x.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) m(r, c) = f.exp(rows[r][c]);
  return m;
}

}  // namespace

LinearCode LinearCode::from_rows(FiniteField field, GfMatrix rows, std::string provenance) {
  LinearCode c{std::move(field), std::move(rows), 0, 0, 0, std::move(provenance)};
  c.length = c.generator.cols();
  rref(c.generator, c.field);
  c.dimension = c.generator.rows();
  return c;
}

std::vector<std::uint32_t> evaluation_indices(const ToricSet& x, const Monomial& a) {
  const std::uint64_t order = x.field().group_order();
  std::vector<std::uint32_t> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto p = x.indices(i);
    std::uint64_t acc = 0;
    for (int j = 0; j < x.s(); ++j) acc += std::uint64_t{a.exponents[j]} * p[j];
    out[i] = static_cast<std::uint32_t>(acc % order);
  }
  return out;
}

GfMatrix evaluation_matrix(const ToricSet& x, int d) {
  if (d < 0) throw InputError("degree must be non-negative");
  const auto& f = x.field();
  const auto monos = monomials(x.s(), d);
  GfMatrix m(monos.size(), x.size());
  for (std::size_t r = 0; r < monos.size(); ++r) {
    const auto idx = evaluation_indices(x, monos[r]);
    for (std::size_t c = 0; c < x.size(); ++c) m(r, c) = f.exp(idx[c]);
  }
  return m;
}

LinearCode code(const ToricSet& x, int d) {
  if (d < 1) throw InputError("code order d must be at least 1");
  LinearCode c = LinearCode::from_rows(x.field(), to_matrix(x, distinct_rows(x, d)));
  c.order = d;
  c.provenance = "C_X(" + std::to_string(d) + ") over " + x.field().describe() + ", |X| = " +
                 std::to_string(x.size());
  return c;
}

std::size_t hilbert_function(const ToricSet& x, int d) {
  if (d < 0) throw InputError("degree must be non-negative");
  if (d == 0) return 1;
  if (x.is_group()) {
    // Monomials restrict to characters of X. Distinct characters are linearly
    // independent, and a character is fixed by its values on generators.
    const auto gens = generators(x);
    const std::uint32_t order = x.field().group_order();
    std::set<std::vector<std::uint32_t>> rows;
    std::vector<std::uint32_t> row(gens.size());
    for (const auto& m : monomials(x.s(), d)) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto p = x.indices(gens[k]);
        std::uint64_t e = 0;
        for (int j = 0; j < x.s(); ++j) e += std::uint64_t{m.exponents[j]} * p[j];
        row[k] = static_cast<std::uint32_t>(e % order);
      }
      rows.insert(row);
    }
    return rows.size();
  }
  return rank(to_matrix(x, distinct_rows(x, d)), x.field());
}

std::vector<std::size_t> hilbert_until_regularity(const ToricSet& x) {
  const std::int64_t bound = std::int64_t{x.field().q() - 2} * (x.s() - 1);
  std::vector<std::size_t> h{1};
  while (h.back() < x.size()) {
    const int d = static_cast<int>(h.size());
    if (d > bound && d > static_cast<std::int64_t>(x.size()) - 1) {
      throw Error("Hilbert function failed to reach |X| by degree " + std::to_string(d));
    }
    h.push_back(hilbert_function(x, d));
  }
  return h;
}

int regularity(const ToricSet& x) { return static_cast<int>(hilbert_until_regularity(x).size()) - 1; }

std::vector<std::size_t> h_vector(const ToricSet& x) {
  const auto h = hilbert_until_regularity(x);
  std::vector<std::size_t> out(h.size());
  out[0] = h[0];
  for (std::size_t i = 1; i < h.size(); ++i) out[i] = h[i] - h[i - 1];
  return out;
}

std::size_t singleton_bound(const ToricSet& x, int d) {
  if (d < 1) throw InputError("code order d must be at least 1");
  return x.size() - hilbert_function(x, d) + 1;
}

}  // namespace toric
