#include "toriccode/toric_set.hpp"

#include <algorithm>
#include <ostream>
#include <thread>
#include <unordered_set>

#include "toriccode/error.hpp"
#include "toriccode/intlattice.hpp"

namespace toric {
namespace {

struct IndexVectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

using PointSet = std::unordered_set<std::vector<std::uint32_t>, IndexVectorHash>;

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) return UINT64_MAX;
  }
  return r;
}

// Walks all y in (K^*)^n with y_0 fixed to each value in [first_lo, first_hi).
void walk(const Clutter& c, std::uint32_t order, std::uint32_t first_lo, std::uint32_t first_hi, PointSet& out) {
  const int n = c.num_vertices();
  const int s = c.num_edges();
  std::vector<std::vector<int>> edges_of(n);
  for (int j = 0; j < s; ++j)
    for (int v : c.edges()[j]) edges_of[v].push_back(j);

  std::vector<std::uint32_t> y(n, 0);
  std::vector<std::uint32_t> coord(s, 0);
  std::vector<std::uint32_t> key(s, 0);
  auto bump = [&](int v, std::uint32_t delta) {
    for (int j : edges_of[v]) coord[j] = (coord[j] + delta) % order;
  };
  y[0] = first_lo;
  bump(0, first_lo % order);
  if (first_lo >= first_hi) return;
  while (true) {
    for (int j = 0; j < s; ++j) key[j] = (coord[j] + order - coord[0]) % order;
    if (!out.contains(key)) out.insert(key);
    // Odometer over y_{n-1}, ..., y_1, then y_0 within its slice.
    int v = n - 1;
    while (v >= 1) {
      if (y[v] + 1 < order) {
        ++y[v];
        bump(v, 1);
        break;
      }
      bump(v, order - y[v]);  // back to 0
      y[v] = 0;
      --v;
    }
    if (v >= 1) continue;
    if (y[0] + 1 >= first_hi) break;
    ++y[0];
    bump(0, 1);
  }
}

ToricSet from_point_set(const FiniteField& f, int s, ToricSource src, const PointSet& pts) {
  std::vector<std::vector<std::uint32_t>> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::uint32_t> flat;
  flat.reserve(sorted.size() * s);
  for (const auto& p : sorted) flat.insert(flat.end(), p.begin(), p.end());
  return ToricSet(f, s, src, std::move(flat));
}

}  // namespace

ProjectivePoint canonicalize(const FiniteField& f, std::vector<FieldElement> coords) {
  auto it = std::find_if(coords.begin(), coords.end(), [](FieldElement a) { return !a.is_zero(); });
  if (it == coords.end()) throw InputError("the zero vector is not a projective point");
  const FieldElement scale = f.inv(*it);
  for (auto& x : coords) x = f.mul(x, scale);
  return ProjectivePoint{std::move(coords)};
}

ToricSet::ToricSet(FiniteField field, int s, ToricSource source, std::vector<std::uint32_t> flat_indices)
    : field_(std::move(field)), s_(s), source_(source), count_(0), flat_(std::move(flat_indices)) {
  if (s_ < 1 || flat_.size() % s_ != 0) throw InputError("point data does not match the coordinate count");
  const std::uint32_t m = field_.group_order();
  std::vector<std::vector<std::uint32_t>> pts(flat_.size() / s_);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::uint32_t lead = flat_[i * s_];
    for (int j = 0; j < s_; ++j) {
      const std::uint32_t e = flat_[i * s_ + j];
      if (e >= m) throw InputError("primitive-power index out of range");
      pts[i].push_back((e + m - lead) % m);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  count_ = pts.size();
  flat_.clear();
  for (const auto& p : pts) flat_.insert(flat_.end(), p.begin(), p.end());
}

ProjectivePoint ToricSet::point(std::size_t i) const {
  ProjectivePoint p;
  for (auto e : indices(i)) p.coords.push_back(field_.exp(e));
  return p;
}

bool ToricSet::contains(std::span<const std::uint32_t> idx) const {
  std::size_t lo = 0, hi = count_;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto p = indices(mid);
    if (std::lexicographical_compare(p.begin(), p.end(), idx.begin(), idx.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < count_ && std::ranges::equal(indices(lo), idx);
}

void ToricSet::write_csv(std::ostream& os) const {
  for (int j = 0; j < s_; ++j) os << (j ? "," : "") << "t" << (j + 1);
  os << "\n";
  for (std::size_t i = 0; i < count_; ++i) {
    auto p = indices(i);
    for (int j = 0; j < s_; ++j) os << (j ? "," : "") << (p[j] + 1);
    os << "\n";
  }
}

std::uint64_t enumeration_cost(const Clutter& c, const FiniteField& f) {
  return saturating_pow(f.group_order(), c.num_vertices());
}

ToricSet enumerate_x(const Clutter& c, const FiniteField& f, const EnumerationOptions& opts) {
  const std::uint64_t cost = enumeration_cost(c, f);
  if (cost > opts.budget) {
    throw BudgetExceeded("enumerating X needs " + std::to_string(cost) + " unit tuples, budget is " +
                             std::to_string(opts.budget),
                         cost);
  }
  const std::uint32_t order = f.group_order();
  const unsigned workers = std::clamp<unsigned>(opts.threads, 1, order);
  std::vector<PointSet> parts(workers);
  if (workers == 1) {
    walk(c, order, 0, order, parts[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint32_t lo = order * w / workers, hi = order * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] { walk(c, order, lo, hi, parts[w]); });
    }
  }
  for (unsigned w = 1; w < workers; ++w) parts[0].merge(parts[w]);
  return from_point_set(f, c.num_edges(), ToricSource::kClutter, parts[0]);
}

ToricSet projective_torus(int s, const FiniteField& f) {
  if (s < 2) throw InputError("a projective torus needs s >= 2");
  const std::uint32_t order = f.group_order();
  const std::uint64_t count = saturating_pow(order, s - 1);
  if (count > kDefaultEnumerationBudget) throw BudgetExceeded("projective torus is too large", count);
  std::vector<std::uint32_t> flat;
  flat.reserve(count * s);
  std::vector<std::uint32_t> p(s, 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    flat.insert(flat.end(), p.begin(), p.end());
    for (int j = s - 1; j >= 1; --j) {
      if (++p[j] < order) break;
      p[j] = 0;
    }
  }
  return ToricSet(f, s, ToricSource::kTorus, std::move(flat));
}

bool equals_torus(const ToricSet& x) {
  const std::uint32_t order = x.field().group_order();
  if (x.size() != saturating_pow(order, x.s() - 1)) return false;
  // Points are distinct, canonical and unit-valued, so the count settles it
  // once each one is confirmed to lie in the torus.
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto p = x.indices(i);
    if (p[0] != 0) return false;
    for (auto e : p)
      if (e >= order) return false;
  }
  return true;
}

ToricProfile profile(const Clutter& c, const ToricSet& x) {
  ToricProfile pr;
  pr.size = x.size();
  pr.n = c.num_vertices();
  pr.s = c.num_edges();
  pr.rank = rank_rational(incidence(c));
  pr.full_rank = pr.rank == pr.n;
  pr.uniform = uniformity(c).uniform;
  pr.torus_degree = saturating_pow(x.field().group_order(), pr.n - 1);
  pr.degree_matches = pr.size == pr.torus_degree;
  if (!pr.full_rank) {
    pr.note = "incidence matrix has rank " + std::to_string(pr.rank) + " < n; the degree formula does not apply";
  } else if (!pr.uniform) {
    pr.note = "clutter is not uniform; the degree formula does not apply";
  } else {
    pr.note = "normality of the edge ideal is asserted by the user, not verified";
  }
  return pr;
}

ToricProfile profile(const Clutter& c, const FiniteField& f, const EnumerationOptions& opts) {
  return profile(c, enumerate_x(c, f, opts));
}

namespace {

std::size_t index_of(const ToricSet& x, std::span<const std::uint32_t> idx) {
  std::size_t lo = 0, hi = x.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto p = x.indices(mid);
    if (std::lexicographical_compare(p.begin(), p.end(), idx.begin(), idx.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == x.size() || !std::equal(idx.begin(), idx.end(), x.indices(lo).begin()))
    throw Error("point set is not closed under multiplication");
  return lo;
}

}  // namespace

std::vector<std::size_t> generators(const ToricSet& x) {
  if (!x.is_group()) throw InputError("generators need X to be a group");
  const std::uint32_t order = x.field().group_order();
  std::vector<char> reached(x.size(), 0);
  std::vector<std::vector<std::uint32_t>> sub{std::vector<std::uint32_t>(x.s(), 0)};
  reached[index_of(x, sub[0])] = 1;
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < x.size() && sub.size() < x.size(); ++i) {
    if (reached[i]) continue;
    gens.push_back(i);
    // Add the cosets H g, H g^2, ... until they repeat.
    const auto g = x.indices(i);
    std::vector<std::vector<std::uint32_t>> coset = sub;
    while (true) {
      for (auto& v : coset)
        for (int j = 0; j < x.s(); ++j) v[j] = (v[j] + g[j]) % order;
      if (reached[index_of(x, coset[0])]) break;
      for (const auto& v : coset) {
        reached[index_of(x, v)] = 1;
        sub.push_back(v);
      }
    }
  }
  return gens;
}

std::vector<std::uint32_t> multiply_points(const ToricSet& x, std::size_t a, std::size_t b) {
  const std::uint32_t order = x.field().group_order();
  auto pa = x.indices(a), pb = x.indices(b);
  std::vector<std::uint32_t> out(x.s());
  for (int j = 0; j < x.s(); ++j) out[j] = (pa[j] + pb[j]) % order;
  const std::uint32_t first = out[0];
  for (auto& e : out) e = (e + order - first) % order;
  return out;
}

}  // namespace toric
