#include "toriccode/vanishing_ideal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "toriccode/error.hpp"
#include "toriccode/eval_code.hpp"

namespace toric {
namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

bool revlex_less(const Monomial& a, const Monomial& b) { return revlex_greater(b, a); }

// Degree-d candidates: t_i * m for standard m of degree d-1, minus multiples
// of known leading terms, in ascending revlex order.
std::vector<Monomial> candidates(const std::vector<Monomial>& prev_standard, const std::vector<Monomial>& leading,
                                 int s) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Monomial> out;
  for (const auto& m : prev_standard) {
    for (int i = 0; i < s; ++i) {
      Monomial c = m;
      ++c.exponents[i];
      if (!seen.insert(c.exponents).second) continue;
      const bool reducible =
          std::any_of(leading.begin(), leading.end(), [&](const Monomial& lt) { return lt.divides(c); });
      if (!reducible) out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), revlex_less);
  return out;
}

HomogPoly make_poly(const Monomial& lead, std::vector<Term> tail) {
  HomogPoly p;
  p.terms.push_back({lead, FieldElement(1)});
  for (auto& t : tail) p.terms.push_back(std::move(t));
  std::sort(p.terms.begin() + 1, p.terms.end(),
            [](const Term& a, const Term& b) { return revlex_greater(a.monomial, b.monomial); });
  return p;
}

// One degree of interpolation by character matching.
class CharacterDegree {
 public:
  explicit CharacterDegree(const ToricSet& x) : x_(x) {}

  // Returns true and fills `poly` if `m` is a leading term.
  bool process(const Monomial& m, HomogPoly& poly) {
    auto key = evaluation_indices(x_, m);
    auto [it, inserted] = first_.try_emplace(std::move(key), m);
    if (inserted) return false;
    poly = make_poly(m, {Term{it->second, x_.field().neg(x_.field().one())}});
    return true;
  }

 private:
  const ToricSet& x_;
  std::unordered_map<std::vector<std::uint32_t>, Monomial, VecHash> first_;
};

// One degree of interpolation by incremental elimination. Each basis row
// keeps its evaluation vector (unit pivot, zero at earlier pivots) and the
// combination of standard monomials it came from.
class EliminationDegree {
 public:
  explicit EliminationDegree(const ToricSet& x) : x_(x), f_(x.field()) {}

  bool process(const Monomial& m, HomogPoly& poly) {
    const std::size_t npts = x_.size();
    std::vector<FieldElement> v(npts);
    const auto idx = evaluation_indices(x_, m);
    for (std::size_t i = 0; i < npts; ++i) v[i] = f_.exp(idx[i]);
    // v = eval(m) - sum_j coef[j] * eval(standard[j])
    std::vector<FieldElement> coef(standard_.size());
    for (const auto& row : rows_) {
      const FieldElement a = v[row.pivot];
      if (a.is_zero()) continue;
      axpy(v, f_.neg(a), row.vec, f_);
      axpy(std::span<FieldElement>(coef).first(row.combo.size()), a, row.combo, f_);
    }
    const auto pivot = std::find_if(v.begin(), v.end(), [](FieldElement e) { return !e.is_zero(); });
    if (pivot == v.end()) {
      std::vector<Term> tail;
      for (std::size_t j = 0; j < coef.size(); ++j)
        if (!coef[j].is_zero()) tail.push_back({standard_[j], f_.neg(coef[j])});
      poly = make_poly(m, std::move(tail));
      return true;
    }
    const FieldElement inv = f_.inv(*pivot);
    Row row;
    row.pivot = static_cast<std::size_t>(pivot - v.begin());
    for (auto& e : v) e = f_.mul(e, inv);
    row.vec = std::move(v);
    row.combo.resize(standard_.size() + 1);
    for (std::size_t j = 0; j < coef.size(); ++j) row.combo[j] = f_.mul(f_.neg(coef[j]), inv);
    row.combo.back() = inv;
    rows_.push_back(std::move(row));
    standard_.push_back(m);
    return false;
  }

 private:
  struct Row {
    std::size_t pivot = 0;
    std::vector<FieldElement> vec;
    std::vector<FieldElement> combo;
  };
  const ToricSet& x_;
  const FiniteField& f_;
  std::vector<Row> rows_;
  std::vector<Monomial> standard_;
};

template <class Degree>
ReducedGB interpolate(const ToricSet& x) {
  ReducedGB g;
  g.s = x.s();
  std::vector<Monomial> leading;
  std::vector<Monomial> standard{Monomial{std::vector<std::uint32_t>(x.s(), 0)}};
  bool saturated = standard.size() == x.size();
  while (true) {
    Degree deg(x);
    std::vector<Monomial> next;
    std::vector<HomogPoly> found;
    for (const auto& m : candidates(standard, leading, x.s())) {
      HomogPoly p;
      if (deg.process(m, p)) {
        found.push_back(std::move(p));
      } else {
        next.push_back(m);
      }
    }
    std::sort(found.begin(), found.end(),
              [](const HomogPoly& a, const HomogPoly& b) { return revlex_greater(a.leading().monomial, b.leading().monomial); });
    for (auto& p : found) {
      leading.push_back(p.leading().monomial);
      g.elements.push_back(std::move(p));
    }
    standard = std::move(next);
    if (saturated) break;
    saturated = standard.size() == x.size();
  }
  return g;
}

}  // namespace

FieldElement HomogPoly::evaluate(const FiniteField& f, std::span<const std::uint32_t> point) const {
  FieldElement acc = f.zero();
  for (const auto& t : terms) {
    std::uint64_t e = 0;
    for (std::size_t j = 0; j < point.size(); ++j) e += std::uint64_t{t.monomial.exponents[j]} * point[j];
    acc = f.add(acc, f.mul(t.coeff, f.exp(e)));
  }
  return acc;
}

std::string HomogPoly::to_string(const FiniteField& f) const {
  std::string out;
  const FieldElement minus_one = f.neg(f.one());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    FieldElement c = t.coeff;
    bool negative = false;
    if (c == minus_one && c != f.one()) {
      negative = true;
      c = f.one();
    }
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (c != f.one()) out += f.format(c) + "*";
    out += t.monomial.to_string();
  }
  return out.empty() ? "0" : out;
}

std::vector<Monomial> ReducedGB::leading_terms() const {
  std::vector<Monomial> out;
  for (const auto& e : elements) out.push_back(e.leading().monomial);
  return out;
}

ReducedGB interpolate_gb(const ToricSet& x, const GbOptions& opts) {
  if (x.size() == 0) throw InputError("cannot interpolate over an empty point set");
  GbStrategy strategy = opts.strategy;
  if (strategy == GbStrategy::kAuto) strategy = x.is_group() ? GbStrategy::kCharacter : GbStrategy::kElimination;
  if (strategy == GbStrategy::kCharacter && !x.is_group())
    throw InputError("the character strategy needs X to be a group");
  return strategy == GbStrategy::kCharacter ? interpolate<CharacterDegree>(x) : interpolate<EliminationDegree>(x);
}

int degree_complexity(const ReducedGB& g) {
  std::uint32_t d = 0;
  for (const auto& e : g.elements) d = std::max(d, e.degree());
  return static_cast<int>(d);
}

std::uint64_t standard_monomial_count(const ReducedGB& g, int d) {
  const auto lts = g.leading_terms();
  std::uint64_t count = 0;
  for (const auto& m : monomials(g.s, d)) {
    if (std::none_of(lts.begin(), lts.end(), [&](const Monomial& lt) { return lt.divides(m); })) ++count;
  }
  return count;
}

bool is_reduced(const ReducedGB& g) {
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    const auto& lt = g.elements[i].leading();
    if (lt.coeff != FieldElement(1)) return false;
    for (std::size_t j = 0; j < g.elements.size(); ++j) {
      for (std::size_t t = 0; t < g.elements[j].terms.size(); ++t) {
        if (i == j && t == 0) continue;
        if (lt.monomial.divides(g.elements[j].terms[t].monomial)) return false;
      }
    }
  }
  return true;
}

std::vector<HomogPoly> torus_binomials(int s, const FiniteField& f) {
  std::vector<HomogPoly> out;
  const std::uint32_t e = f.group_order();
  for (int i = 0; i + 1 < s; ++i) {
    Monomial lead{std::vector<std::uint32_t>(s, 0)}, tail{std::vector<std::uint32_t>(s, 0)};
    lead.exponents[i] = e;
    tail.exponents[s - 1] = e;
    out.push_back(make_poly(lead, {Term{tail, f.neg(f.one())}}));
  }
  return out;
}

GbStructureReport verify_gb_structure(const ReducedGB& g, const FiniteField& f) {
  GbStructureReport rep;
  const std::uint32_t cap = f.group_order();

  rep.pure_powers_present = true;
  for (const auto& want : torus_binomials(g.s, f)) {
    if (std::find(g.elements.begin(), g.elements.end(), want) == g.elements.end()) {
      rep.pure_powers_present = false;
      rep.failures.push_back("missing " + want.to_string(f));
    }
  }

  rep.degree_cap_ok = true;
  rep.binomials_disjoint_ok = true;
  for (const auto& e : g.elements) {
    for (const auto& t : e.terms) {
      for (auto x : t.monomial.exponents) {
        if (x > cap) {
          rep.degree_cap_ok = false;
          rep.failures.push_back("variable degree above q-1 in " + e.to_string(f));
          break;
        }
      }
    }
    const bool binomial = e.terms.size() == 2 && e.terms[0].coeff == f.one() && e.terms[1].coeff == f.neg(f.one());
    bool disjoint = binomial;
    if (binomial) {
      const auto& a = e.terms[0].monomial.exponents;
      const auto& b = e.terms[1].monomial.exponents;
      for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] && b[j]) disjoint = false;
    }
    if (!disjoint) {
      rep.binomials_disjoint_ok = false;
      rep.failures.push_back("not a binomial with disjoint supports: " + e.to_string(f));
    }
  }
  return rep;
}

bool binomial_in_ix(std::span<const std::uint32_t> a_plus, std::span<const std::uint32_t> a_minus,
                    const Clutter& c, std::int64_t q) {
  const auto s = static_cast<std::size_t>(c.num_edges());
  if (a_plus.size() != s || a_minus.size() != s) throw InputError("exponent vectors must have length s");
  if (q < 3) throw InputError("membership criterion needs q >= 3");
  std::uint64_t dp = 0, dm = 0;
  for (std::size_t j = 0; j < s; ++j) {
    if (a_plus[j] && a_minus[j]) throw InputError("exponent vectors must have disjoint supports");
    dp += a_plus[j];
    dm += a_minus[j];
  }
  if (dp != dm) return false;
  const std::int64_t mod = q - 1;
  for (int v = 0; v < c.num_vertices(); ++v) {
    std::int64_t diff = 0;
    for (std::size_t j = 0; j < s; ++j) {
      diff += c.vector(static_cast<int>(j))[v] * (static_cast<std::int64_t>(a_plus[j]) - a_minus[j]);
    }
    if (((diff % mod) + mod) % mod != 0) return false;
  }
  return true;
}

bool binomial_vanishes(std::span<const std::uint32_t> a_plus, std::span<const std::uint32_t> a_minus,
                       const ToricSet& x) {
  const auto& f = x.field();
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto p = x.indices(i);
    std::uint64_t ep = 0, em = 0;
    for (int j = 0; j < x.s(); ++j) {
      ep += std::uint64_t{a_plus[j]} * p[j];
      em += std::uint64_t{a_minus[j]} * p[j];
    }
    if (f.exp(ep) != f.exp(em)) return false;
  }
  return true;
}

std::uint64_t hilbert_ia(const Clutter& c, int d, std::uint64_t budget) {
  if (d < 0) throw InputError("degree must be non-negative");
  const int s = c.num_edges();
  const std::uint64_t count = binomial(static_cast<std::uint64_t>(s + d - 1), static_cast<std::uint64_t>(d));
  if (count > budget) {
    throw BudgetExceeded("I_A Hilbert function needs " + std::to_string(count) + " monomials", count);
  }
  std::set<std::vector<std::int64_t>> sums;
  for (const auto& m : monomials(s, d)) {
    std::vector<std::int64_t> sum(c.num_vertices(), 0);
    for (int j = 0; j < s; ++j)
      for (int v : c.edges()[j]) sum[v] += m.exponents[j];
    sums.insert(std::move(sum));
  }
  return sums.size();
}

}  // namespace toric
