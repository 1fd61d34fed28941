// Copyright 2026 The sipdepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sipdepth/treedepth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "json.hpp"
#include "sipdepth/error.hpp"
#include "sipdepth/gaifman.hpp"

namespace sipdepth {

namespace {

// Depth of every vertex (roots have depth 1).
std::vector<std::size_t> vertex_depths(const EliminationForest& f) {
  const std::size_t n = f.size();
  std::vector<std::size_t> depth(n, 0);
  std::vector<Vertex> path;
  for (Vertex s = 0; s < n; ++s) {
    if (depth[s] != 0) continue;
    path.clear();
    Vertex v = s;
    // Walk up until a vertex with known depth or a root.
    while (true) {
      if (path.size() > n) throw Error(Errc::kNotAForest, {s}, "parent pointers contain a cycle");
      path.push_back(v);
      const auto& p = f.parent[v];
      if (!p) break;
      if (*p >= n) throw Error(Errc::kNotAForest, {v}, "parent index out of range");
      if (depth[*p] != 0) break;
      v = *p;
    }
    const auto& top_parent = f.parent[path.back()];
    std::size_t d = top_parent ? depth[*top_parent] : 0;
    for (auto it = path.rbegin(); it != path.rend(); ++it) depth[*it] = ++d;
  }
  return depth;
}

}  // namespace

std::size_t forest_depth(const EliminationForest& f) {
  const auto depth = vertex_depths(f);
  return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
}

std::size_t check_forest(const Graph& g, const EliminationForest& f) {
  if (f.size() != g.size()) {
    throw Error(Errc::kDimensionMismatch, {}, "forest has " + std::to_string(f.size()) +
                                                  " slots, graph has " +
                                                  std::to_string(g.size()) + " vertices");
  }
  const auto depth = vertex_depths(f);
  auto root_of = [&](Vertex v) {
    while (f.parent[v]) v = *f.parent[v];
    return v;
  };
  for (const auto& [u, v] : g.edges()) {
    Vertex low = depth[u] >= depth[v] ? u : v;
    const Vertex high = low == u ? v : u;
    while (depth[low] > depth[high]) low = *f.parent[low];
    if (low == high) continue;
    if (root_of(u) != root_of(v)) throw Error(Errc::kCrossTreeEdge, {u, v});
    throw Error(Errc::kUncoveredEdge, {u, v});
  }
  return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
}

// ---------------------------------------------------------------------------
// Exact treedepth

namespace {

using Mask = std::uint32_t;

class ExactSolver {
 public:
  explicit ExactSolver(const Graph& g) : n_(g.size()), adj_(n_, 0) {
    for (const auto& [u, v] : g.edges()) {
      adj_[u] |= Mask{1} << v;
      adj_[v] |= Mask{1} << u;
    }
    td_.assign(std::size_t{1} << n_, 0);
    best_.assign(std::size_t{1} << n_, 0);
  }

  std::size_t solve(Mask set) {
    if (set == 0) return 0;
    if (td_[set] != 0) return td_[set];
    std::uint8_t result = 0;
    const auto comps = components(set);
    if (comps.size() > 1) {
      for (Mask c : comps) result = std::max<std::uint8_t>(result, solve(c));
    } else if (std::popcount(set) == 1) {
      result = 1;
      best_[set] = static_cast<std::uint8_t>(std::countr_zero(set));
    } else {
      result = 0xff;
      for (Mask rest = set; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const auto candidate = static_cast<std::uint8_t>(1 + solve(set & ~(Mask{1} << v)));
        if (candidate < result) {  // strict: smallest minimizing vertex wins
          result = candidate;
          best_[set] = static_cast<std::uint8_t>(v);
        }
      }
    }
    td_[set] = result;
    return result;
  }

  void build(Mask set, std::optional<Vertex> parent, EliminationForest& out) {
    for (Mask c : components(set)) {
      const Vertex v = best_[c];
      out.parent[v] = parent;
      build(c & ~(Mask{1} << v), v, out);
    }
  }

  std::vector<Mask> components(Mask set) const {
    std::vector<Mask> out;
    while (set != 0) {
      Mask comp = set & (~set + 1);
      Mask frontier = comp;
      while (frontier != 0) {
        Mask next = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) next |= adj_[std::countr_zero(f)];
        next &= set & ~comp;
        comp |= next;
        frontier = next;
      }
      out.push_back(comp);
      set &= ~comp;
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<Mask> adj_;
  std::vector<std::uint8_t> td_;
  std::vector<std::uint8_t> best_;
};

}  // namespace

TreedepthResult exact_treedepth(const Graph& g) {
  if (g.size() > kExactTreedepthCap) {
    throw Error(Errc::kTooLarge, {g.size()},
                "exact treedepth is capped at " + std::to_string(kExactTreedepthCap) +
                    " vertices");
  }
  TreedepthResult out;
  out.forest.parent.assign(g.size(), std::nullopt);
  if (g.size() == 0) return out;
  ExactSolver solver(g);
  const Mask all = g.size() == 32 ? ~Mask{0} : (Mask{1} << g.size()) - 1;
  out.depth = solver.solve(all);
  solver.build(all, std::nullopt, out.forest);
  return out;
}

// ---------------------------------------------------------------------------
// Incidence forest -> dual / primal forest

namespace {

// Rebuilds an elimination forest over one side of the incidence graph. The
// `target_rows` flag selects the dual (rows) or primal (columns) side.
EliminationForest project_incidence_forest(const SparseMatrix& a, const EliminationForest& f,
                                           bool target_rows) {
  const Graph g = incidence_graph(a);
  std::vector<std::size_t> depth;
  try {
    check_forest(g, f);
    depth = vertex_depths(f);
  } catch (const Error& e) {
    throw Error(Errc::kInvalidInputForest, e.where(), e.what());
  }

  const std::size_t m = a.rows;
  auto on_target = [&](Vertex v) { return target_rows ? v < m : v >= m; };
  auto target_index = [&](Vertex v) { return target_rows ? v : v - m; };

  EliminationForest out;
  out.parent.assign(target_rows ? a.rows : a.cols, std::nullopt);
  std::vector<char> alive(g.size(), 1);
  std::vector<char> seen(g.size(), 0);

  std::function<void(const std::vector<Vertex>&, std::optional<Vertex>)> place =
      [&](const std::vector<Vertex>& region, std::optional<Vertex> parent) {
        for (Vertex v : region) seen[v] = 0;
        for (Vertex start : region) {
          if (!alive[start] || seen[start]) continue;
          // Collect the component of `start` among alive vertices.
          std::vector<Vertex> comp{start};
          seen[start] = 1;
          for (std::size_t k = 0; k < comp.size(); ++k) {
            for (Vertex w : g.neighbors(comp[k])) {
              if (alive[w] && !seen[w]) {
                seen[w] = 1;
                comp.push_back(w);
              }
            }
          }
          std::sort(comp.begin(), comp.end());
          const Vertex top = *std::min_element(comp.begin(), comp.end(), [&](Vertex x, Vertex y) {
            return depth[x] < depth[y];
          });
          std::optional<Vertex> below = parent;
          alive[top] = 0;
          if (on_target(top)) {
            out.parent[target_index(top)] = parent;
            below = target_index(top);
          } else {
            // Eliminate every still-present neighbor instead, ascending.
            for (Vertex w : g.neighbors(top)) {
              if (!alive[w]) continue;
              out.parent[target_index(w)] = below;
              below = target_index(w);
              alive[w] = 0;
            }
          }
          std::vector<Vertex> rest;
          for (Vertex v : comp) {
            if (alive[v]) rest.push_back(v);
          }
          place(rest, below);
        }
      };

  std::vector<Vertex> everything(g.size());
  for (Vertex v = 0; v < g.size(); ++v) everything[v] = v;
  place(everything, std::nullopt);
  return out;
}

}  // namespace

EliminationForest incidence_to_dual_forest(const SparseMatrix& a,
                                           const EliminationForest& f_incidence) {
  return project_incidence_forest(a, f_incidence, true);
}

EliminationForest incidence_to_primal_forest(const SparseMatrix& a,
                                             const EliminationForest& f_incidence) {
  return project_incidence_forest(a, f_incidence, false);
}

// ---------------------------------------------------------------------------

std::string serialize_forest(const EliminationForest& f) {
  nlohmann::ordered_json parents = nlohmann::ordered_json::array();
  for (const auto& p : f.parent) {
    if (p) {
      parents.push_back(*p);
    } else {
      parents.push_back(-1);
    }
  }
  nlohmann::ordered_json j;
  j["parent"] = std::move(parents);
  return j.dump() + "\n";
}

EliminationForest parse_forest(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::kSyntax, {}, e.what());
  }
  if (!j.is_object() || !j.contains("parent") || !j["parent"].is_array()) {
    throw Error(Errc::kSyntax, {}, "expected {\"parent\": [...]}");
  }
  EliminationForest f;
  for (const auto& p : j["parent"]) {
    if (!p.is_number_integer()) throw Error(Errc::kSyntax, {}, "parent entries must be integers");
    const auto v = p.get<std::int64_t>();
    if (v == -1) {
      f.parent.push_back(std::nullopt);
    } else if (v >= 0) {
      f.parent.push_back(static_cast<Vertex>(v));
    } else {
      throw Error(Errc::kSyntax, {}, "parent entries must be -1 or a vertex index");
    }
  }
  return f;
}

}  // namespace sipdepth
