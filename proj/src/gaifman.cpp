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

#include "sipdepth/gaifman.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace sipdepth {

namespace {

std::vector<std::string> prefixed_labels(char prefix, std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

// Clique over each support list.
Graph clique_union(std::size_t n, const std::vector<std::vector<std::size_t>>& groups,
                   std::vector<std::string> labels) {
  Graph g(n, std::move(labels));
  for (const auto& group : groups) {
    for (std::size_t x = 0; x < group.size(); ++x) {
      for (std::size_t y = x + 1; y < group.size(); ++y) g.add_edge(group[x], group[y]);
    }
  }
  return g;
}

}  // namespace

Graph incidence_graph(const SparseMatrix& a) {
  auto labels = prefixed_labels('r', a.rows);
  auto col_labels = prefixed_labels('c', a.cols);
  labels.insert(labels.end(), col_labels.begin(), col_labels.end());
  Graph g(a.rows + a.cols, std::move(labels));
  for (const auto& e : a.entries) g.add_edge(row_vertex(a, e.row), col_vertex(a, e.col));
  return g;
}

Graph primal_graph(const SparseMatrix& a) {
  return clique_union(a.cols, a.row_supports(), prefixed_labels('c', a.cols));
}

Graph dual_graph(const SparseMatrix& a) {
  return clique_union(a.rows, a.col_supports(), prefixed_labels('r', a.rows));
}

DegreeStats degree_stats(const SparseMatrix& a) {
  std::vector<std::size_t> per_row(a.rows, 0), per_col(a.cols, 0);
  for (const auto& e : a.entries) {
    ++per_row[e.row];
    ++per_col[e.col];
  }
  DegreeStats s;
  if (!per_row.empty()) s.maxdeg_c = *std::max_element(per_row.begin(), per_row.end());
  if (!per_col.empty()) s.maxdeg_v = *std::max_element(per_col.begin(), per_col.end());
  return s;
}

}  // namespace sipdepth
