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

#ifndef SIPDEPTH_TREEDEPTH_HPP_
#define SIPDEPTH_TREEDEPTH_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sipdepth/graph.hpp"
#include "sipdepth/sip.hpp"

namespace sipdepth {

/// Rooted forest given by parent pointers; std::nullopt marks a root.
struct EliminationForest {
  std::vector<std::optional<Vertex>> parent;

  std::size_t size() const { return parent.size(); }

  friend bool operator==(const EliminationForest&, const EliminationForest&) = default;
};

/// Returns the depth (vertices on the longest root-to-leaf path) of `f` if it
/// is an elimination forest of `g`: every edge joins an ancestor/descendant
/// pair. Throws NotAForest, UncoveredEdge(u, v) or CrossTreeEdge(u, v).
std::size_t check_forest(const Graph& g, const EliminationForest& f);

/// Depth of a parent array; throws NotAForest on a cycle or bad index.
std::size_t forest_depth(const EliminationForest& f);

inline constexpr std::size_t kExactTreedepthCap = 20;

struct TreedepthResult {
  std::size_t depth = 0;
  EliminationForest forest;
};

/// Exact treedepth by memoized recursion over vertex subsets. Throws TooLarge
/// above kExactTreedepthCap vertices.
TreedepthResult exact_treedepth(const Graph& g);

/// Turns an elimination forest of incidence_graph(a) into one of dual_graph(a)
/// with depth at most max(1, maxdeg_V) * depth(f_incidence).
EliminationForest incidence_to_dual_forest(const SparseMatrix& a,
                                           const EliminationForest& f_incidence);

/// Same for primal_graph(a), depth at most max(1, maxdeg_C) * depth(f_incidence).
EliminationForest incidence_to_primal_forest(const SparseMatrix& a,
                                             const EliminationForest& f_incidence);

std::string serialize_forest(const EliminationForest& f);
EliminationForest parse_forest(std::string_view text);

}  // namespace sipdepth

#endif  // SIPDEPTH_TREEDEPTH_HPP_
