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

#ifndef SIPDEPTH_CNF_HPP_
#define SIPDEPTH_CNF_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace sipdepth {

struct Literal {
  std::size_t var = 0;  ///< 0-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

using Assignment = std::vector<bool>;

bool satisfies(const Clause& clause, const Assignment& a);
bool satisfies(const CnfFormula& cnf, const Assignment& a);

/// Drops tautological clauses and repeated literals. Empty clauses stay.
/// Indices (into the input) of dropped clauses go to `dropped` if given.
CnfFormula normalize(const CnfFormula& cnf, std::vector<std::size_t>* dropped = nullptr);

bool is_normalized(const CnfFormula& cnf);

/// DIMACS CNF reader. Variables are 1-based in the file, 0-based in memory.
CnfFormula parse_dimacs(std::string_view text);
std::string serialize_dimacs(const CnfFormula& cnf);

/// Exhaustive SAT check; returns the first model in lexicographic order
/// (false < true, variable 0 most significant). Intended for n <= 25.
std::optional<Assignment> brute_force_sat(const CnfFormula& cnf);

/// Assignment number `index` in the lexicographic order used by
/// brute_force_sat and decide_reduction.
Assignment assignment_from_index(std::uint64_t index, std::size_t num_vars);

/// Deterministic generator: every clause picks min(3, num_vars) distinct
/// variables uniformly and a uniform polarity for each.
class FormulaGenerator {
 public:
  explicit FormulaGenerator(std::uint64_t seed) : engine_(seed) {}

  CnfFormula random_3cnf(std::size_t num_vars, std::size_t num_clauses);

  /// Uniform draw from [0, bound) with rejection sampling; identical across
  /// standard libraries, unlike std::uniform_int_distribution.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace sipdepth

#endif  // SIPDEPTH_CNF_HPP_
