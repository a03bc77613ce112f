// Acceptance suite: one PASS/FAIL line per criterion; nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "battery.hpp"
#include "toriccode/error.hpp"
#include "toriccode/eval_code.hpp"
#include "toriccode/intlattice.hpp"
#include "toriccode/mindist.hpp"
#include "toriccode/vanishing_ideal.hpp"

using namespace toric;

namespace {

// Collects mismatches for one criterion.
struct Check {
  std::vector<std::string> failures;

  template <typename A, typename B>
  void eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << show(got) << ", want " << show(want);
      failures.push_back(os.str());
    }
  }
  void that(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }

 private:
  template <typename T>
  static std::string show(const T& v) {
    std::ostringstream os;
    if constexpr (requires { v.begin(); }) {
      os << '[';
      bool first = true;
      for (const auto& x : v) {
        os << (first ? "" : ",") << x;
        first = false;
      }
      os << ']';
    } else {
      os << v;
    }
    return os.str();
  }
};

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<std::size_t> sizes(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }

const std::vector<battery::Entry>& graph_battery() {
  static const auto b = battery::graphs(7);
  return b;
}

// Triangle over GF(9).
void criterion1(Check& ck) {
  const auto f = FiniteField::make(3, 2);
  const auto c = families::cycle(3);
  const auto x = enumerate_x(c, f);
  ck.eq(x.size(), std::size_t{64}, "|X|");
  ck.that(equals_torus(x), "X should be the projective torus");
  const int reg = regularity(x);
  std::vector<std::size_t> dims, deltas;
  for (int d = 1; d <= 14; ++d) {
    const auto r = distance_report(&c, x, d, reg);
    dims.push_back(r.dimension);
    deltas.push_back(r.delta->value);
  }
  ck.eq(dims, sizes({3, 6, 10, 15, 21, 28, 36, 43, 49, 54, 58, 61, 63, 64}), "dim");
  ck.eq(deltas, sizes({56, 48, 40, 32, 24, 16, 8, 7, 6, 5, 4, 3, 2, 1}), "delta");
  const auto c1 = code(x, 1), c2 = code(x, 2);
  ck.eq(projective_message_count(9, c1.dimension), std::uint64_t{91}, "classes at d=1");
  ck.eq(min_distance_bruteforce(c1).value, std::size_t{56}, "exhaustive delta at d=1");
  ck.eq(min_distance_bruteforce(c2).value, std::size_t{48}, "exhaustive delta at d=2");
}

// Shared by the two complete-graph tables: Singleton and torus-bound rows
// from the report, exact distances from the given searches.
void complete_graph_table(Check& ck, std::uint64_t q, std::size_t length, const std::vector<std::uint64_t>& b,
                          const std::vector<std::uint64_t>& dp, const std::vector<std::uint64_t>& delta,
                          const std::function<DistanceResult(const LinearCode&, int)>& search) {
  const auto f = FiniteField::from_order(q);
  const auto c = families::complete_graph(4);
  const auto x = enumerate_x(c, f);
  ck.eq(x.size(), length, "length");
  const int reg = regularity(x);
  std::vector<std::size_t> bs, dps, ds;
  for (int d = 1; d <= static_cast<int>(b.size()); ++d) {
    const auto r = distance_report(&c, x, d, reg);
    bs.push_back(r.singleton);
    dps.push_back(r.delta_prime.value_or(0));
    const auto res = search(code(x, d), d);
    ck.that(res.exact, "search at d=" + std::to_string(d) + " not exact");
    ds.push_back(res.value);
  }
  ck.eq(bs, sizes(b), "Singleton bounds");
  ck.eq(dps, sizes(dp), "torus bounds");
  ck.eq(ds, sizes(delta), "delta");
}

void criterion2(Check& ck) {
  complete_graph_table(ck, 3, 8, {3, 1, 1}, {4, 2, 1}, {2, 1, 1},
                       [](const LinearCode& c, int) { return min_distance_bruteforce(c); });
}

void criterion3(Check& ck) {
  complete_graph_table(ck, 4, 27, {22, 9, 1, 1, 1, 1}, {18, 9, 6, 3, 2, 1}, {12, 3, 1, 1, 1, 1},
                       [](const LinearCode& c, int d) {
                         return d == 1 ? min_distance_bruteforce(c) : min_distance_isd(c);
                       });
}

// Projective tori.
void criterion4(Check& ck) {
  for (std::uint64_t q : {3, 4, 5, 9}) {
    const auto f = FiniteField::from_order(q);
    for (int s = 2; s <= 4; ++s) {
      if (ipow(q - 1, s - 1) > 10'000) continue;
      const std::string tag = " (s=" + std::to_string(s) + ", q=" + std::to_string(q) + ")";
      const auto t = projective_torus(s, f);
      ck.eq(t.size(), ipow(q - 1, s - 1), "|T|" + tag);
      ck.eq(regularity(t), (s - 1) * static_cast<int>(q - 2), "reg" + tag);
      // (1 + t + ... + t^{q-2})^{s-1}
      std::vector<std::size_t> h{1};
      for (int i = 0; i < s - 1; ++i) {
        std::vector<std::size_t> next(h.size() + q - 2, 0);
        for (std::size_t a = 0; a < h.size(); ++a)
          for (std::size_t b = 0; b + 1 < q; ++b) next[a + b] += h[a];
        h = next;
      }
      ck.eq(h_vector(t), h, "h-vector" + tag);
      ck.that(interpolate_gb(t).elements == torus_binomials(s, f), "Groebner basis" + tag);
    }
  }
}

// Complete-intersection classifier against the geometric test.
void criterion5(Check& ck) {
  for (std::uint64_t q : {3, 4, 5}) {
    const auto f = FiniteField::from_order(q);
    for (const auto& g : graph_battery()) {
      const std::string tag = " (" + g.name + ", q=" + std::to_string(q) + ")";
      const auto rep = ci_classify(g.clutter, static_cast<std::int64_t>(q));
      const auto x = enumerate_x(g.clutter, f);
      const bool torus = equals_torus(x);
      ck.that(rep.applicable, "verdict not applicable" + tag);
      ck.eq(rep.is_ci, torus, "verdict vs torus test" + tag);
      ck.eq(x.size() == ipow(q - 1, g.clutter.num_edges() - 1), torus, "size test vs torus test" + tag);
      ck.eq(rep.is_ci, g.expect_ci(), "expected verdict" + tag);
    }
  }
}

// Reduced Groebner basis structure.
void criterion6(Check& ck) {
  for (std::uint64_t q : {3, 4}) {
    const auto f = FiniteField::from_order(q);
    for (const auto& g : graph_battery()) {
      const std::string tag = " (" + g.name + ", q=" + std::to_string(q) + ")";
      const auto x = enumerate_x(g.clutter, f);
      const auto gb = interpolate_gb(x);
      const auto rep = verify_gb_structure(gb, f);
      ck.that(rep.all_passed(), "structure check" + tag);
      ck.that(is_reduced(gb), "not reduced" + tag);
      for (const auto& e : gb.elements) {
        ck.that(e.terms.size() == 2, "not a binomial: " + e.to_string(f) + tag);
        for (const auto& t : e.terms) ck.that(t.monomial.degree() == e.degree(), "not homogeneous" + tag);
        for (std::size_t i = 0; i < x.size(); ++i) {
          if (!e.evaluate(f, x.indices(i)).is_zero()) {
            ck.that(false, e.to_string(f) + " does not vanish on X" + tag);
            break;
          }
        }
      }
      for (int d = 0; d <= degree_complexity(gb); ++d)
        ck.eq(standard_monomial_count(gb, d), std::uint64_t{hilbert_function(x, d)},
              "standard monomials at d=" + std::to_string(d) + tag);
    }
  }
}

// H_X and the toric ideal agree below q-1.
void criterion7(Check& ck) {
  auto run = [&](const Clutter& c, const std::string& name, std::uint64_t q) {
    const auto x = enumerate_x(c, FiniteField::from_order(q));
    for (int d = 1; d <= static_cast<int>(q) - 2; ++d)
      ck.eq(std::uint64_t{hilbert_function(x, d)}, hilbert_ia(c, d),
            "H at d=" + std::to_string(d) + " (" + name + ", q=" + std::to_string(q) + ")");
  };
  for (std::uint64_t q : {4, 5})
    for (const auto& g : graph_battery()) run(g.clutter, g.name, q);
  run(families::cycle(3), "C3", 9);
}

// Regularity and distance bounds.
void criterion8(Check& ck) {
  for (std::uint64_t q : {3, 4, 5}) {
    const auto f = FiniteField::from_order(q);
    for (const auto& g : graph_battery()) {
      const std::string tag = " (" + g.name + ", q=" + std::to_string(q) + ")";
      const auto& c = g.clutter;
      const auto x = enumerate_x(c, f);
      const int reg = regularity(x);
      ck.that(reg <= static_cast<int>(q - 2) * (c.num_edges() - 1), "reg above (q-2)(s-1)" + tag);
      // From reg on, C_X(d) is the whole space, so a weight-one word exists.
      for (int d = reg; d <= reg + 1; ++d) {
        if (d < 1) continue;
        ck.eq(hilbert_function(x, d), x.size(), "code not full at d=" + std::to_string(d) + tag);
        if (x.size() <= 128) ck.eq(min_distance_isd(code(x, d)).value, std::size_t{1}, "delta past reg" + tag);
      }
      if (!g.connected_non_bipartite()) continue;
      const int n = c.num_vertices();
      ck.eq(x.size(), ipow(q - 1, n - 1), "|X| for a normal class" + tag);
      ck.that(reg <= static_cast<int>(q - 2) * (n - 1), "reg above (q-2)(n-1)" + tag);
      SearchOptions so;
      so.time_budget = std::chrono::milliseconds(5000);
      for (int d = 1; d < reg; ++d) {
        const auto r = distance_report(&c, x, d, reg, {MethodChoice::kAuto, so, true});
        // Any found word bounds delta from above, so the check holds even
        // when the search stops early.
        ck.that(r.delta->value <= torus_distance(q, n, d),
                "delta above the torus bound at d=" + std::to_string(d) + tag);
      }
    }
  }
}

// Low-degree binomials t_i^b - t^c with i outside supp(c).
void criterion9(Check& ck) {
  std::size_t checked = 0;
  for (std::uint64_t q : {3, 4}) {
    const auto f = FiniteField::from_order(q);
    for (const auto& g : graph_battery()) {
      const int s = g.clutter.num_edges();
      if (s > 4) continue;
      const std::string tag = " (" + g.name + ", q=" + std::to_string(q) + ")";
      const auto x = enumerate_x(g.clutter, f);
      for (int i = 0; i < s; ++i) {
        for (int b = 1; b <= static_cast<int>(q) - 1; ++b) {
          std::vector<std::uint32_t> ap(s, 0);
          ap[i] = b;
          for (const auto& m : monomials(s - 1, b)) {
            std::vector<std::uint32_t> am(s, 0);
            for (int j = 0, k = 0; j < s; ++j)
              if (j != i) am[j] = m.exponents[k++];
            const bool vanishes = binomial_vanishes(ap, am, x);
            ++checked;
            const bool pure = std::count(am.begin(), am.end(), 0u) == s - 1;
            const bool expected = b == static_cast<int>(q) - 1 && pure;
            if (vanishes != expected)
              ck.that(false, "t" + std::to_string(i + 1) + "^" + std::to_string(b) + " - " +
                                 Monomial{am}.to_string() + (vanishes ? " vanishes" : " does not vanish") + tag);
          }
        }
      }
    }
  }
  ck.that(checked >= 500, "too few binomials checked: " + std::to_string(checked));
}

}  // namespace

int main(int argc, char** argv) {
  // Optional arguments select criteria by number.
  std::set<std::size_t> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoul(argv[i]));
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"triangle over GF(9): |X|, dimensions and distances", criterion1},
      {"K4 over GF(3): Singleton, torus bound and exact distance rows", criterion2},
      {"K4 over GF(4): Singleton, torus bound and exact distance rows", criterion3},
      {"projective tori: size, regularity, h-vector, Groebner basis", criterion4},
      {"complete-intersection classifier battery", criterion5},
      {"Groebner basis structure over the battery", criterion6},
      {"Hilbert function equals the toric count below degree q-1", criterion7},
      {"regularity and minimum-distance bounds", criterion8},
      {"low-degree binomials vanishing on X", criterion9},
  };
  std::cout << "battery: " << graph_battery().size() << " graphs" << std::endl;
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && !only.count(i + 1)) continue;
    Check ck;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(ck);
    } catch (const std::exception& e) {
      ck.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = ck.failures.empty();
    failed += !ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " [" << timing
              << "]\n";
    for (std::size_t k = 0; k < ck.failures.size() && k < 10; ++k) std::cout << "    " << ck.failures[k] << '\n';
    if (ck.failures.size() > 10) std::cout << "    ... " << ck.failures.size() - 10 << " more\n";
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
