#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toriccode/int_matrix.hpp"

namespace toric {

/// A clutter (Sperner family) on vertices 0..n-1. Edge order is preserved from
/// the input: edge j becomes coordinate t_{j+1} of the ambient projective
/// space, so it also fixes the revlex variable order.
class Clutter {
 public:
  /// `edges` use 1-based vertex indices, as in the file formats.
  static Clutter from_edges(int n, const std::vector<std::vector<int>>& edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  /// 0-based, sorted vertex lists.
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  /// Characteristic vector of edge j, length n, entries 0/1.
  const std::vector<std::int64_t>& vector(int j) const { return vectors_[j]; }
  const std::vector<std::vector<std::int64_t>>& vectors() const { return vectors_; }
  /// Vertices that lie in no edge.
  std::vector<int> isolated_vertices() const;
  /// Human-readable validation warnings (isolated vertices).
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> edges_;
  std::vector<std::vector<std::int64_t>> vectors_;
  std::vector<std::string> warnings_;
};

/// `{"n": 4, "edges": [[1,2],[1,3]]}`.
Clutter parse_clutter_json(std::string_view text);
/// One edge per line, space-separated 1-based vertex indices; `#` starts a
/// comment. An optional `n <count>` line fixes the vertex count, otherwise
/// it is the largest index used.
Clutter parse_clutter_text(std::string_view text);
/// Dispatches on content: a leading `{` means JSON.
Clutter parse_clutter(std::string_view text);
Clutter load_clutter(const std::string& path);

/// n x s matrix whose column j is the characteristic vector of edge j.
IntMatrix incidence(const Clutter& c);

struct Uniformity {
  bool uniform = false;
  std::optional<int> edge_size;
};
Uniformity uniformity(const Clutter& c);

/// Standard families, used by tests and the CLI.
namespace families {
Clutter cycle(int n);
Clutter path(int n);
Clutter complete_graph(int n);
Clutter star(int leaves);
/// s singleton edges {1},...,{s}: its toric set is the projective torus in
/// P^{s-1}.
Clutter singletons(int s);
/// Odd cycle of length `cycle_len` with a pendant path of `tail` extra
/// vertices hanging off vertex 1.
Clutter cycle_with_tail(int cycle_len, int tail);
}  // namespace families

}  // namespace toric
