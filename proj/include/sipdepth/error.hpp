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

#ifndef SIPDEPTH_ERROR_HPP_
#define SIPDEPTH_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sipdepth {

/// Every failure raised by the library carries one of these codes plus the
/// indices it refers to (row/col, vertex pair, clause, ...).
enum class Errc {
  // sip-core
  kSyntax,
  kDimensionMismatch,
  kIndexOutOfRange,
  kZeroEntry,
  kDuplicateEntry,
  kCrossedBounds,
  kInfiniteLowerBound,
  // treedepth
  kNotAForest,
  kUncoveredEdge,
  kCrossTreeEdge,
  kTooLarge,
  kInvalidInputForest,
  // numbers
  kNotCoprime,
  kResidueOutOfRange,
  kModulusTooSmall,
  // reduction
  kEmptyClause,
  kNoVariables,
  kNotNormalized,
  kFalsifies,
  kNotASolution,
  kTooManyVariables,
  kProvenanceMismatch,
  // solvers
  kUnboundedVariable,
  kSearchSpaceTooLarge,
  kUnprunableUnboundedVariable,
  kCoefficientRangeTooLarge,
  kBudgetExceeded,
  kInternal,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::vector<std::size_t> where, const std::string& detail = {});

  Errc code() const noexcept { return code_; }
  const std::vector<std::size_t>& where() const noexcept { return where_; }

 private:
  Errc code_;
  std::vector<std::size_t> where_;
};

}  // namespace sipdepth

#endif  // SIPDEPTH_ERROR_HPP_
