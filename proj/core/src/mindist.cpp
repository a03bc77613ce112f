#include "toriccode/mindist.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "toriccode/error.hpp"
#include "toriccode/intlattice.hpp"

namespace toric {
namespace {

using Clock = std::chrono::steady_clock;

struct Best {
  std::size_t weight = SIZE_MAX;
  std::uint64_t order = UINT64_MAX;  // enumeration position, for deterministic ties
  std::vector<FieldElement> word;

  void offer(std::size_t w, std::uint64_t pos, std::span<const FieldElement> cw) {
    if (w < weight || (w == weight && pos < order)) {
      weight = w;
      order = pos;
      word.assign(cw.begin(), cw.end());
    }
  }
  void merge(const Best& o) {
    if (o.weight < weight || (o.weight == weight && o.order < order)) *this = o;
  }
};

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget)
      : active_(budget.count() > 0), end_(Clock::now() + budget) {}
  bool expired() {
    if (!active_) return false;
    if (hit_.load(std::memory_order_relaxed)) return true;
    if (Clock::now() >= end_) hit_.store(true, std::memory_order_relaxed);
    return hit_.load(std::memory_order_relaxed);
  }
  bool hit() const { return hit_.load(std::memory_order_relaxed); }

 private:
  bool active_;
  Clock::time_point end_;
  std::atomic<bool> hit_{false};
};

template <class Fn>
void run_partitioned(unsigned threads, std::uint64_t total, Fn&& fn) {
  const unsigned workers = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(total, 1)));
  if (workers == 1) {
    fn(0u, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    pool.emplace_back([&fn, w, lo, hi] { fn(w, lo, hi); });
  }
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i)
    if (__builtin_mul_overflow(r, b, &r)) return UINT64_MAX;
  return r;
}

// Projective messages with leading 1 at position `lead`, remaining digits
// over positions lead+1..k-1 taken from the base-q expansion of `tail`.
void scan_bruteforce(const LinearCode& code, std::uint64_t lo, std::uint64_t hi, Best& best) {
  const auto& f = code.field;
  const std::size_t k = code.dimension, m = code.length;
  const std::uint32_t q = f.q();
  std::vector<std::uint64_t> block(k);
  for (std::size_t i = 0; i < k; ++i) block[i] = ipow(q, k - 1 - i);

  std::uint64_t pos = lo;
  std::size_t lead = 0;
  std::uint64_t base = 0;
  while (lead < k && pos >= base + block[lead]) base += block[lead++];
  std::vector<FieldElement> cw(m);
  std::vector<std::uint32_t> digit(k, 0);
  while (pos < hi && lead < k) {
    // Decode the starting message of this leading block.
    std::uint64_t tail = pos - base;
    std::fill(cw.begin(), cw.end(), FieldElement{});
    std::fill(digit.begin(), digit.end(), 0);
    axpy(cw, f.one(), code.generator.row(lead), f);
    for (std::size_t j = k; j-- > lead + 1;) {
      digit[j] = static_cast<std::uint32_t>(tail % q);
      tail /= q;
      axpy(cw, FieldElement(digit[j]), code.generator.row(j), f);
    }
    const std::uint64_t block_end = std::min(hi, base + block[lead]);
    while (true) {
      best.offer(hamming_weight(cw), pos, cw);
      if (best.weight == 1) return;
      if (++pos >= block_end) break;
      std::size_t j = k - 1;
      while (true) {
        const FieldElement old(digit[j]);
        digit[j] = (digit[j] + 1) % q;
        axpy(cw, f.sub(FieldElement(digit[j]), old), code.generator.row(j), f);
        if (digit[j] != 0) break;
        --j;
      }
    }
    base += block[lead];
    ++lead;
  }
}

struct InformationSet {
  GfMatrix generator;  // systematic on `columns`
  std::vector<std::size_t> columns;
  std::size_t deficit = 0;  // k minus the number of new columns contributed
};

// Gauss-Jordan on `m`, taking pivots only from columns with allowed[c] set.
// Rows [start, k) are processed; returns the pivot columns.
std::vector<std::size_t> eliminate_on(GfMatrix& m, const FiniteField& f, std::size_t start,
                                      const std::vector<bool>& allowed) {
  std::vector<std::size_t> pivots;
  std::size_t r = start;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    if (!allowed[c]) continue;
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
    const FieldElement scale = f.inv(m(r, c));
    for (auto& x : m.row(r)) x = f.mul(x, scale);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && !m(i, c).is_zero()) axpy(m.row(i), f.neg(m(i, c)), m.row(r), f);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<InformationSet> information_sets(const LinearCode& code) {
  const std::size_t k = code.dimension, m = code.length;
  std::vector<InformationSet> sets;
  std::vector<bool> used(m, false);
  while (true) {
    GfMatrix g = code.generator;
    std::vector<bool> fresh(m);
    for (std::size_t c = 0; c < m; ++c) fresh[c] = !used[c];
    auto pivots = eliminate_on(g, code.field, 0, fresh);
    if (pivots.empty()) break;
    for (auto c : pivots) used[c] = true;
    const std::size_t contributed = pivots.size();
    if (contributed < k) {
      // Complete to a systematic form using columns of earlier sets.
      std::vector<bool> old(m);
      for (std::size_t c = 0; c < m; ++c) old[c] = used[c] && std::find(pivots.begin(), pivots.end(), c) == pivots.end();
      auto extra = eliminate_on(g, code.field, contributed, old);
      pivots.insert(pivots.end(), extra.begin(), extra.end());
    }
    // Order rows so that row i is the unit vector on pivots[i].
    GfMatrix sys(k, m);
    for (std::size_t i = 0; i < k; ++i) std::ranges::copy(g.row(i), sys.row(i).begin());
    sets.push_back({std::move(sys), std::move(pivots), k - contributed});
    if (contributed < k) break;
  }
  return sets;
}

std::size_t lower_bound_after(const std::vector<InformationSet>& sets, std::size_t w, std::size_t done_in_w) {
  // Sets [0, done_in_w) have finished weight w, the rest only weight w-1.
  std::size_t lb = 0;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    const std::size_t reach = (j < done_in_w ? w : w - 1) + 1;
    if (reach > sets[j].deficit) lb += reach - sets[j].deficit;
  }
  return std::max<std::size_t>(lb, 1);
}

// All messages of Hamming weight exactly w whose first row index lies in
// [first_lo, first_hi), with coefficient 1 on the first row.
void scan_weight(const GfMatrix& g, const FiniteField& f, std::size_t w, std::size_t first_lo,
                 std::size_t first_hi, std::uint64_t order_base, Best& best, Deadline& deadline) {
  const std::size_t k = g.rows(), m = g.cols();
  const std::uint32_t order = f.group_order();
  std::vector<std::vector<FieldElement>> partial(w + 1, std::vector<FieldElement>(m));
  std::vector<std::size_t> rows(w);
  std::uint64_t counter = 0;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t depth, std::size_t next_row) -> void {
    if (stop) return;
    if (depth == w) {
      if ((++counter & 0xFFF) == 0 && deadline.expired()) {
        stop = true;
        return;
      }
      best.offer(hamming_weight(partial[w]), order_base + counter, partial[w]);
      if (best.weight == 1) stop = true;
      return;
    }
    const std::size_t row_hi = depth == 0 ? std::min(first_hi, k - w + 1) : k - (w - depth - 1);
    for (std::size_t r = (depth == 0 ? first_lo : next_row); r < row_hi && !stop; ++r) {
      rows[depth] = r;
      const std::uint32_t coeffs = depth == 0 ? 1 : order;
      for (std::uint32_t e = 0; e < coeffs && !stop; ++e) {
        partial[depth + 1] = partial[depth];
        axpy(partial[depth + 1], f.exp(e), g.row(r), f);
        self(self, depth + 1, r + 1);
      }
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::string to_string(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::kBruteforce: return "bruteforce";
    case DistanceMethod::kIsd: return "isd";
    case DistanceMethod::kFormula: return "formula";
    case DistanceMethod::kBoundOnly: return "bound-only";
  }
  return "unknown";
}

std::string to_string(MethodChoice m) {
  switch (m) {
    case MethodChoice::kAuto: return "auto";
    case MethodChoice::kBruteforce: return "bruteforce";
    case MethodChoice::kIsd: return "isd";
    case MethodChoice::kFormula: return "formula";
  }
  return "unknown";
}

MethodChoice parse_method(const std::string& name) {
  if (name == "auto") return MethodChoice::kAuto;
  if (name == "bruteforce") return MethodChoice::kBruteforce;
  if (name == "isd") return MethodChoice::kIsd;
  if (name == "formula") return MethodChoice::kFormula;
  throw InputError("unknown distance method '" + name + "' (auto|bruteforce|isd|formula)");
}

std::uint64_t projective_message_count(std::uint64_t q, std::size_t k) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t b = ipow(q, i);
    if (b == UINT64_MAX || __builtin_add_overflow(total, b, &total)) return UINT64_MAX;
  }
  return total;
}

DistanceResult min_distance_bruteforce(const LinearCode& code, const SearchOptions& opts) {
  if (code.dimension == 0) throw InputError("the zero code has no minimum distance");
  const std::uint64_t total = projective_message_count(code.field.q(), code.dimension);
  if (total > opts.class_budget) {
    throw BudgetExceeded("brute force needs " + std::to_string(total) + " codeword classes, budget is " +
                             std::to_string(opts.class_budget),
                         total);
  }
  std::vector<Best> parts(std::max(1u, opts.threads));
  run_partitioned(opts.threads, total, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    scan_bruteforce(code, lo, hi, parts[w]);
  });
  Best best;
  for (const auto& p : parts) best.merge(p);
  return {best.weight, DistanceMethod::kBruteforce, true, std::move(best.word)};
}

DistanceResult min_distance_isd(const LinearCode& code, const SearchOptions& opts) {
  if (code.dimension == 0) throw InputError("the zero code has no minimum distance");
  const auto& f = code.field;
  const std::size_t k = code.dimension;
  const auto sets = information_sets(code);
  Deadline deadline(opts.time_budget);
  Best best;
  for (std::size_t w = 1; w <= k; ++w) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      std::vector<Best> parts(std::max(1u, opts.threads));
      run_partitioned(opts.threads, k, [&](unsigned t, std::uint64_t lo, std::uint64_t hi) {
        scan_weight(sets[j].generator, f, w, lo, hi, lo << 40, parts[t], deadline);
      });
      Best round;
      for (const auto& p : parts) round.merge(p);
      if (round.weight < best.weight) best = std::move(round);
      if (deadline.hit()) return {best.weight, DistanceMethod::kIsd, false, std::move(best.word)};
      if (lower_bound_after(sets, w, j + 1) >= best.weight) {
        return {best.weight, DistanceMethod::kIsd, true, std::move(best.word)};
      }
    }
  }
  // Every message was enumerated in the first set.
  return {best.weight, DistanceMethod::kIsd, true, std::move(best.word)};
}

std::uint64_t torus_distance(std::int64_t q, std::int64_t n, std::int64_t d) {
  if (q < 3) throw InputError("torus distance needs q >= 3");
  if (n < 2) throw InputError("torus distance needs n >= 2");
  if (d < 1) throw InputError("torus distance needs d >= 1");
  if (d >= (q - 2) * (n - 1)) return 1;
  const std::int64_t k = (d - 1) / (q - 2);
  const std::int64_t l = d - k * (q - 2);
  std::uint64_t v = ipow(static_cast<std::uint64_t>(q - 1), static_cast<std::size_t>(n - (k + 2)));
  return v * static_cast<std::uint64_t>(q - 1 - l);
}

DistanceReport distance_report(const Clutter* clutter, const ToricSet& x, int d, int reg,
                               const ReportOptions& opts) {
  if (d < 1) throw InputError("code order d must be at least 1");
  const auto& f = x.field();
  DistanceReport rep;
  rep.d = d;
  rep.length = x.size();
  rep.regularity = reg;
  rep.is_torus = equals_torus(x);
  rep.dimension = hilbert_function(x, d);
  rep.singleton = rep.length - rep.dimension + 1;

  if (clutter != nullptr && clutter->num_vertices() >= 2) {
    const bool uniform = uniformity(*clutter).uniform;
    const bool full_rank = rank_rational(incidence(*clutter)) == clutter->num_vertices();
    if (uniform && full_rank && opts.assume_normal) {
      rep.delta_prime = torus_distance(f.q(), clutter->num_vertices(), d);
      rep.notes.push_back("delta' assumes a normal edge ideal (asserted, not verified)");
    }
  }

  const bool auto_mode = opts.method == MethodChoice::kAuto;
  if (auto_mode && d >= reg) {
    DistanceResult r{1, DistanceMethod::kBoundOnly, true, std::vector<FieldElement>(rep.length)};
    r.witness[0] = f.one();
    rep.delta = std::move(r);
    rep.notes.push_back("d >= reg, so C_X(d) is the full space and delta = 1");
    return rep;
  }
  MethodChoice method = opts.method;
  if (auto_mode) {
    if (rep.is_torus) {
      method = MethodChoice::kFormula;
    } else if (projective_message_count(f.q(), rep.dimension) <= opts.search.class_budget) {
      method = MethodChoice::kBruteforce;
    } else {
      method = MethodChoice::kIsd;
    }
  }
  switch (method) {
    case MethodChoice::kFormula:
      if (!rep.is_torus) throw InputError("the closed formula is exact only when X is a projective torus");
      rep.delta = DistanceResult{torus_distance(f.q(), x.s(), d), DistanceMethod::kFormula, true, {}};
      rep.notes.push_back("X is a projective torus; delta equals the torus formula");
      break;
    case MethodChoice::kBruteforce: rep.delta = min_distance_bruteforce(code(x, d), opts.search); break;
    case MethodChoice::kIsd: rep.delta = min_distance_isd(code(x, d), opts.search); break;
    case MethodChoice::kAuto: break;
  }
  return rep;
}

DistanceReport distance_report(const Clutter& clutter, const FiniteField& f, int d, const ReportOptions& opts) {
  EnumerationOptions eo;
  eo.threads = opts.search.threads;
  const ToricSet x = enumerate_x(clutter, f, eo);
  return distance_report(&clutter, x, d, regularity(x), opts);
}

}  // namespace toric
