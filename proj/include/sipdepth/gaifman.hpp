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

#ifndef SIPDEPTH_GAIFMAN_HPP_
#define SIPDEPTH_GAIFMAN_HPP_

#include <cstddef>

#include "sipdepth/graph.hpp"
#include "sipdepth/sip.hpp"

namespace sipdepth {

// Vertex numbering for the incidence graph: rows 0..m-1, then columns
// m..m+n-1. Labels are "r<i>" and "c<j>".

inline Vertex row_vertex(const SparseMatrix&, std::size_t row) { return row; }
inline Vertex col_vertex(const SparseMatrix& a, std::size_t col) { return a.rows + col; }

/// Bipartite graph with an edge {r_i, c_j} for every nonzero a_ij.
Graph incidence_graph(const SparseMatrix& a);

/// Columns joined when some row has a nonzero in both.
Graph primal_graph(const SparseMatrix& a);

/// Rows joined when some column has a nonzero in both.
Graph dual_graph(const SparseMatrix& a);

struct DegreeStats {
  std::size_t maxdeg_c = 0;  ///< largest row support
  std::size_t maxdeg_v = 0;  ///< largest column support

  friend bool operator==(const DegreeStats&, const DegreeStats&) = default;
};

DegreeStats degree_stats(const SparseMatrix& a);

}  // namespace sipdepth

#endif  // SIPDEPTH_GAIFMAN_HPP_
