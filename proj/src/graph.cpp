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

#include "sipdepth/graph.hpp"

#include <algorithm>

#include "json.hpp"
#include "sipdepth/error.hpp"

namespace sipdepth {

using Json = nlohmann::ordered_json;

Graph::Graph(std::size_t n, std::vector<std::string> labels)
    : adj_(n), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n) {
    throw Error(Errc::kDimensionMismatch, {}, "one label per vertex required");
  }
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges,
                        std::vector<std::string> labels) {
  Graph g(n, std::move(labels));
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= size() || v >= size()) throw Error(Errc::kIndexOutOfRange, {u, v});
  if (u == v) throw Error(Errc::kSyntax, {u}, "self-loop");
  auto insert = [](std::vector<Vertex>& list, Vertex w) {
    auto it = std::lower_bound(list.begin(), list.end(), w);
    if (it == list.end() || *it != w) list.insert(it, w);
  };
  insert(adj_[u], v);
  insert(adj_[v], u);
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& list : adj_) total += list.size();
  return total / 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(const std::vector<Vertex>& keep) const {
  std::vector<std::size_t> index(size(), size());
  for (std::size_t k = 0; k < keep.size(); ++k) index[keep[k]] = k;
  std::vector<std::string> sub_labels;
  if (!labels_.empty()) {
    for (Vertex v : keep) sub_labels.push_back(labels_[v]);
  }
  Graph sub(keep.size(), std::move(sub_labels));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    for (Vertex w : adj_[keep[k]]) {
      if (index[w] != size()) sub.adj_[k].push_back(index[w]);
    }
    std::sort(sub.adj_[k].begin(), sub.adj_[k].end());
  }
  return sub;
}

std::vector<std::size_t> component_ids(const Graph& g) {
  const std::size_t unset = g.size();
  std::vector<std::size_t> id(g.size(), unset);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.size(); ++s) {
    if (id[s] != unset) continue;
    id[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (id[w] == unset) {
          id[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return id;
}

std::size_t component_count(const Graph& g) {
  const auto ids = component_ids(g);
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

std::string serialize_graph(const Graph& g) {
  Json j;
  j["n"] = g.size();
  j["labels"] = g.labels();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  return j.dump() + "\n";
}

Graph parse_graph(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::kSyntax, {}, e.what());
  }
  try {
    const auto n = j.at("n").get<std::size_t>();
    auto labels = j.value("labels", std::vector<std::string>{});
    Graph g(n, std::move(labels));
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(Errc::kSyntax, {}, "edge must be a pair");
      g.add_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return g;
  } catch (const Json::exception& e) {
    throw Error(Errc::kSyntax, {}, e.what());
  }
}

}  // namespace sipdepth
