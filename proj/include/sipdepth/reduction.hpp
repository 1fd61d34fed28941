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

#ifndef SIPDEPTH_REDUCTION_HPP_
#define SIPDEPTH_REDUCTION_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sipdepth/cnf.hpp"
#include "sipdepth/sip.hpp"
#include "sipdepth/treedepth.hpp"

namespace sipdepth {

// 3-CNF -> standard-form IP with b = 0, entries in {-1, 0, 1} and incidence
// treedepth at most 5.
//
// Every formula variable v_i gets the i-th prime p_i and a gadget
// (x^i_0, ..., x^i_{p_i}) forcing x^i_0 = y (mod p_i) with 0 <= x^i_0 <= 1, so
// y mod p_i is the truth value of v_i. Every clause C_j gets a gadget
// (z^j_0, ..., z^j_{M_j}), M_j the product of its variables' primes, forcing
// z^j_0 = y (mod M_j) while the box on z^j_0 skips exactly the residue d_j of
// the falsifying assignment.

struct ColumnRole {
  enum class Kind { kY, kX, kZ };
  Kind kind = Kind::kY;
  std::size_t index = 0;  ///< variable i for kX, clause j for kZ
  std::size_t ell = 0;    ///< position inside the gadget

  friend bool operator==(const ColumnRole&, const ColumnRole&) = default;
};

struct RowRole {
  enum class Kind {
    kEqXEqual,  ///< x^i_1 - x^i_ell = 0, ell in [2, p_i]
    kEqXMod,    ///< x^i_0 - y - sum_ell x^i_ell = 0
    kEqZEqual,  ///< z^j_1 - z^j_ell = 0, ell in [2, M_j]
    kEqZMod,    ///< z^j_0 - y - sum_ell z^j_ell = 0
  };
  Kind kind = Kind::kEqXEqual;
  std::size_t index = 0;
  std::size_t ell = 0;  ///< unused for the Mod rows

  friend bool operator==(const RowRole&, const RowRole&) = default;
};

struct ReductionOutput {
  SipInstance sip;
  std::vector<Integer> primes;          ///< p_i per formula variable
  std::vector<Integer> clause_moduli;   ///< M_j = product of p_i over C_j
  std::vector<Integer> forbidden;       ///< d_j in [1, M_j]
  std::size_t y_col = 0;
  std::vector<std::vector<std::size_t>> x_cols;  ///< x_cols[i][ell]
  std::vector<std::vector<std::size_t>> z_cols;  ///< z_cols[j][ell]
  std::vector<ColumnRole> columns;
  std::vector<RowRole> rows;
  std::vector<std::size_t> x_mod_row;   ///< row of EqXMod(i)
  std::vector<std::size_t> z_mod_row;   ///< row of EqZMod(j)
  EliminationForest certificate;
};

/// d_j: the residue class mod M_j (mapped into [1, M_j]) encoding the only
/// assignment that falsifies `clause`. `primes` are the full per-variable
/// primes indexed by Literal::var.
Integer falsifying_value(const Clause& clause, const std::vector<Integer>& primes);

/// Builds the instance. Requires a normalized formula with at least one
/// variable and no empty clause (EmptyClause(j), NoVariables, NotNormalized).
ReductionOutput reduce(const CnfFormula& cnf);

/// Gadget construction from the arithmetic data alone; reduce() calls it and
/// it also rebuilds a ReductionOutput from provenance JSON.
ReductionOutput build_reduction(std::vector<Integer> primes, std::vector<Integer> clause_moduli,
                                std::vector<Integer> forbidden);

/// Elimination forest of depth <= 5 for the incidence graph: root y, then per
/// gadget the modulus row, x_1 (z_1), and the equality rows with their
/// variables below.
EliminationForest certificate_forest(const ReductionOutput& out);

/// Solution vector for a satisfying assignment. Throws Falsifies(j) for the
/// first clause the assignment falsifies.
std::vector<Integer> lift_assignment(const ReductionOutput& out, const Assignment& a);

/// Reads the assignment off y; throws NotASolution unless evaluate(x) holds.
Assignment extract_assignment(const ReductionOutput& out, const std::vector<Integer>& x);

inline constexpr std::size_t kDecideReductionCap = 20;

/// Decides feasibility by enumerating the 2^n assignments (lexicographic,
/// false first) and lifting. Throws TooManyVariables above the cap.
SolveResult decide_reduction(const ReductionOutput& out);

/// Closed-form sizes: rows = sum p_i + sum M_j, cols = 1 + sum (p_i + 1) +
/// sum (M_j + 1).
Integer expected_rows(const ReductionOutput& out);
Integer expected_cols(const ReductionOutput& out);

/// {"y": col, "x": {"i": [cols]}, "z": {"j": [cols]}, "primes": [...],
///  "forbidden": [...]}
std::string serialize_provenance(const ReductionOutput& out);

/// Rebuilds the reduction bookkeeping for `sip` from provenance JSON. Throws
/// ProvenanceMismatch when `sip` is not the instance the provenance describes.
ReductionOutput parse_provenance(std::string_view text, const SipInstance& sip);

}  // namespace sipdepth

#endif  // SIPDEPTH_REDUCTION_HPP_
