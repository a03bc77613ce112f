#pragma once

// Graph battery: cycles, all trees and all odd-unicyclic graphs up to seven
// vertices (up to isomorphism), even cycles and small complete graphs.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toriccode/clutter.hpp"

namespace toric::battery {

enum class Kind { kOddCycle, kEvenCycle, kTree, kOddUnicyclic, kComplete };

struct Entry {
  std::string name;
  Kind kind;
  Clutter clutter;

  bool connected_non_bipartite() const {
    return kind == Kind::kOddCycle || kind == Kind::kOddUnicyclic || kind == Kind::kComplete;
  }
  // Trees and graphs whose only cycle is odd parameterize the whole torus.
  bool expect_ci() const { return kind == Kind::kOddCycle || kind == Kind::kTree || kind == Kind::kOddUnicyclic; }
};

using Edges = std::vector<std::pair<int, int>>;

// Lexicographically least relabeled edge list over all vertex permutations.
inline Edges canonical(int n, const Edges& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Edges best;
  bool first = true;
  do {
    Edges e;
    for (auto [a, b] : edges) e.emplace_back(std::min(perm[a], perm[b]), std::max(perm[a], perm[b]));
    std::sort(e.begin(), e.end());
    if (first || e < best) best = e;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Every graph obtained from the seeds by repeatedly attaching leaves, up to
// max_n vertices, one per isomorphism class. Seeds themselves are included.
inline std::vector<std::pair<int, Edges>> grow_by_leaves(const std::vector<std::pair<int, Edges>>& seeds, int max_n) {
  std::set<std::pair<int, Edges>> seen;
  std::vector<std::pair<int, Edges>> out, frontier;
  for (const auto& [n, e] : seeds) {
    auto key = std::make_pair(n, canonical(n, e));
    if (seen.insert(key).second) {
      out.push_back(key);
      frontier.push_back(key);
    }
  }
  while (!frontier.empty()) {
    std::vector<std::pair<int, Edges>> next;
    for (const auto& [n, e] : frontier) {
      if (n >= max_n) continue;
      for (int v = 0; v < n; ++v) {
        Edges grown = e;
        grown.emplace_back(v, n);
        auto key = std::make_pair(n + 1, canonical(n + 1, grown));
        if (seen.insert(key).second) {
          out.push_back(key);
          next.push_back(key);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

inline Edges cycle_edges(int n) {
  Edges e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return e;
}

inline bool bare_cycle(int n, const Edges& edges) {
  std::vector<int> deg(n, 0);
  for (auto [a, b] : edges) ++deg[a], ++deg[b];
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
}

inline Clutter to_clutter(int n, const Edges& edges) {
  std::vector<std::vector<int>> es;
  for (auto [a, b] : edges) es.push_back({a + 1, b + 1});
  return Clutter::from_edges(n, es);
}

inline std::vector<Entry> graphs(int max_n = 7) {
  std::vector<Entry> out;
  for (int n = 3; n <= max_n; n += 2) out.push_back({"C" + std::to_string(n), Kind::kOddCycle, families::cycle(n)});
  for (int n = 4; n <= std::min(max_n, 6); n += 2)
    out.push_back({"C" + std::to_string(n), Kind::kEvenCycle, families::cycle(n)});
  out.push_back({"K4", Kind::kComplete, families::complete_graph(4)});
  out.push_back({"K5", Kind::kComplete, families::complete_graph(5)});

  int idx = 0;
  for (const auto& [n, e] : grow_by_leaves({{3, {{0, 1}, {1, 2}}}}, max_n))
    out.push_back({"tree" + std::to_string(n) + "." + std::to_string(idx++), Kind::kTree, to_clutter(n, e)});

  std::vector<std::pair<int, Edges>> seeds;
  for (int k = 3; k <= max_n; k += 2) seeds.emplace_back(k, cycle_edges(k));
  idx = 0;
  for (const auto& [n, e] : grow_by_leaves(seeds, max_n)) {
    if (bare_cycle(n, e)) continue;  // listed above
    out.push_back({"unicyclic" + std::to_string(n) + "." + std::to_string(idx++), Kind::kOddUnicyclic,
                   to_clutter(n, e)});
  }
  return out;
}

}  // namespace toric::battery
