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

#ifndef SIPDEPTH_GRAPH_HPP_
#define SIPDEPTH_GRAPH_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sipdepth/sip.hpp"

namespace sipdepth {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n, std::vector<std::string> labels = {});

  /// Builds a graph from an edge list; self-loops are rejected, parallel edges
  /// collapse.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges,
                          std::vector<std::string> labels = {});

  void add_edge(Vertex u, Vertex v);

  std::size_t size() const { return adj_.size(); }
  std::size_t edge_count() const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  /// Empty when the graph is unlabeled.
  const std::vector<std::string>& labels() const { return labels_; }

  /// All edges (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `keep` (ascending), vertices renumbered 0..k-1 in
  /// that order.
  Graph induced(const std::vector<Vertex>& keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
};

/// Component id per vertex, ids assigned in order of smallest member.
std::vector<std::size_t> component_ids(const Graph& g);
std::size_t component_count(const Graph& g);

std::string serialize_graph(const Graph& g);
Graph parse_graph(std::string_view text);

}  // namespace sipdepth

#endif  // SIPDEPTH_GRAPH_HPP_
