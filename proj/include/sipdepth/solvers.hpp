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

#ifndef SIPDEPTH_SOLVERS_HPP_
#define SIPDEPTH_SOLVERS_HPP_

#include <cstddef>
#include <variant>
#include <vector>

#include "sipdepth/graph.hpp"
#include "sipdepth/sip.hpp"

namespace sipdepth {

inline constexpr unsigned long kBruteForceMaxPoints = 10'000'000;

/// Exhaustive box enumeration returning the lexicographically smallest
/// solution. Needs finite bounds (UnboundedVariable) and at most
/// kBruteForceMaxPoints lattice points (SearchSpaceTooLarge).
SolveResult brute_force(const SipInstance& sip);

/// Column-by-column dynamic program over the reachable partial sums
/// sum_{i<=t} A_i x_i, with every coordinate clipped to what the remaining
/// columns can still correct. Exact; cost grows with the row count and the
/// coefficient size. Lower bounds must be finite; +inf upper bounds are
/// replaced by the largest value the clipping intervals admit and rejected
/// with UnprunableUnboundedVariable when no such value exists.
SolveResult solve_few_rows(const SipInstance& sip);

inline constexpr std::size_t kVertexCoverBudget = 25;

/// Minimum vertex cover by a bounded search tree (branch on an uncovered
/// edge), after degree-0 / degree-1 reductions. Ascending vertex list.
/// Throws BudgetExceeded when the optimum exceeds kVertexCoverBudget.
std::vector<Vertex> min_vertex_cover(const Graph& g);

struct Reduced {
  SipInstance sip;
  std::vector<std::size_t> kept_rows;
};

struct Inconsistent {
  std::size_t witness_row = 0;
};

using RowBasisResult = std::variant<Reduced, Inconsistent>;

/// Exact rational elimination on [A | b]. Rows are scanned in order; a row
/// in the span of earlier kept rows is dropped, or reported as the witness if
/// its right-hand side disagrees.
RowBasisResult remove_dependent_rows(const SipInstance& sip);

/// Rank over the rationals of the rows of `a`.
std::size_t rational_rank(const SparseMatrix& a);

struct VertexCoverSolveInfo {
  std::size_t rows_after_reduction = 0;
  std::size_t cover_size = 0;
};

/// Drops dependent rows, bounds the remaining rows by twice the vertex cover
/// number of the incidence graph and hands the instance to solve_few_rows.
SolveResult solve_vertex_cover(const SipInstance& sip, VertexCoverSolveInfo* info = nullptr);

}  // namespace sipdepth

#endif  // SIPDEPTH_SOLVERS_HPP_
