#include "toriccode/clutter.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "toriccode/error.hpp"

namespace toric {

Clutter Clutter::from_edges(int n, const std::vector<std::vector<int>>& edges) {
  if (n < 1) throw InputError("clutter needs at least one vertex");
  if (edges.size() < 2) throw InputError("clutter needs at least two edges (s >= 2)");
  Clutter c;
  c.n_ = n;
  std::set<std::vector<int>> seen;
  for (std::size_t j = 0; j < edges.size(); ++j) {
    if (edges[j].empty()) throw InputError("edge " + std::to_string(j + 1) + " is empty");
    std::vector<int> e;
    for (int v : edges[j]) {
      if (v < 1 || v > n) {
        throw InputError("vertex index " + std::to_string(v) + " in edge " + std::to_string(j + 1) +
                         " is outside 1.." + std::to_string(n));
      }
      e.push_back(v - 1);
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InputError("edge " + std::to_string(j + 1) + " repeats a vertex");
    }
    if (!seen.insert(e).second) throw InputError("duplicate edge " + std::to_string(j + 1));
    c.edges_.push_back(std::move(e));
  }
  for (std::size_t a = 0; a < c.edges_.size(); ++a) {
    for (std::size_t b = 0; b < c.edges_.size(); ++b) {
      if (a != b && std::includes(c.edges_[b].begin(), c.edges_[b].end(), c.edges_[a].begin(),
                                  c.edges_[a].end())) {
        throw InputError("edge " + std::to_string(a + 1) + " is contained in edge " +
                         std::to_string(b + 1) + " (not a clutter)");
      }
    }
  }
  for (const auto& e : c.edges_) {
    std::vector<std::int64_t> v(n, 0);
    for (int x : e) v[x] = 1;
    c.vectors_.push_back(std::move(v));
  }
  for (int v : c.isolated_vertices()) {
    c.warnings_.push_back("vertex " + std::to_string(v + 1) + " lies in no edge");
  }
  return c;
}

std::vector<int> Clutter::isolated_vertices() const {
  std::vector<bool> used(n_, false);
  for (const auto& e : edges_)
    for (int v : e) used[v] = true;
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (!used[v]) out.push_back(v);
  return out;
}

Clutter parse_clutter_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed clutter JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("edges")) throw InputError("clutter JSON needs an \"edges\" array");
  std::vector<std::vector<int>> edges;
  int max_index = 0;
  try {
    edges = doc.at("edges").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception&) {
    throw InputError("\"edges\" must be a list of integer lists");
  }
  for (const auto& e : edges)
    for (int v : e) max_index = std::max(max_index, v);
  int n = max_index;
  if (doc.contains("n")) {
    if (!doc.at("n").is_number_integer()) throw InputError("\"n\" must be an integer");
    n = doc.at("n").get<int>();
  }
  return Clutter::from_edges(n, edges);
}

Clutter parse_clutter_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<int>> edges;
  int n = 0, max_index = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "n") {
      if (!(ls >> n)) throw InputError("line " + std::to_string(lineno) + ": expected vertex count after 'n'");
      continue;
    }
    std::vector<int> edge;
    std::istringstream all(line);
    std::string tok;
    while (all >> tok) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        edge.push_back(v);
        max_index = std::max(max_index, v);
      } catch (const std::exception&) {
        throw InputError("line " + std::to_string(lineno) + ": '" + tok + "' is not a vertex index");
      }
    }
    edges.push_back(std::move(edge));
  }
  return Clutter::from_edges(n > 0 ? n : max_index, edges);
}

Clutter parse_clutter(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return parse_clutter_json(text);
  return parse_clutter_text(text);
}

Clutter load_clutter(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open clutter file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_clutter(buf.str());
}

IntMatrix incidence(const Clutter& c) {
  IntMatrix a(c.num_vertices(), c.num_edges());
  for (int j = 0; j < c.num_edges(); ++j)
    for (int v : c.edges()[j]) a(v, j) = 1;
  return a;
}

Uniformity uniformity(const Clutter& c) {
  const std::size_t size = c.edges().front().size();
  for (const auto& e : c.edges())
    if (e.size() != size) return {};
  return {true, static_cast<int>(size)};
}

namespace families {

Clutter cycle(int n) {
  std::vector<std::vector<int>> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, n});
  return Clutter::from_edges(n, edges);
}

Clutter path(int n) {
  std::vector<std::vector<int>> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Clutter::from_edges(n, edges);
}

Clutter complete_graph(int n) {
  std::vector<std::vector<int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  return Clutter::from_edges(n, edges);
}

Clutter star(int leaves) {
  std::vector<std::vector<int>> edges;
  for (int i = 2; i <= leaves + 1; ++i) edges.push_back({1, i});
  return Clutter::from_edges(leaves + 1, edges);
}

Clutter singletons(int s) {
  std::vector<std::vector<int>> edges;
  for (int i = 1; i <= s; ++i) edges.push_back({i});
  return Clutter::from_edges(s, edges);
}

Clutter cycle_with_tail(int cycle_len, int tail) {
  std::vector<std::vector<int>> edges;
  for (int i = 1; i < cycle_len; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, cycle_len});
  int prev = 1;
  for (int t = 0; t < tail; ++t) {
    const int v = cycle_len + t + 1;
    edges.push_back({prev, v});
    prev = v;
  }
  return Clutter::from_edges(cycle_len + tail, edges);
}

}  // namespace families
}  // namespace toric
