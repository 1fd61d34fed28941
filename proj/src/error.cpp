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

#include "sipdepth/error.hpp"

#include <sstream>

namespace sipdepth {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kSyntax: return "SyntaxError";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kIndexOutOfRange: return "IndexOutOfRange";
    case Errc::kZeroEntry: return "ZeroEntry";
    case Errc::kDuplicateEntry: return "DuplicateEntry";
    case Errc::kCrossedBounds: return "CrossedBounds";
    case Errc::kInfiniteLowerBound: return "InfiniteLowerBound";
    case Errc::kNotAForest: return "NotAForest";
    case Errc::kUncoveredEdge: return "UncoveredEdge";
    case Errc::kCrossTreeEdge: return "CrossTreeEdge";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kInvalidInputForest: return "InvalidInputForest";
    case Errc::kNotCoprime: return "NotCoprime";
    case Errc::kResidueOutOfRange: return "ResidueOutOfRange";
    case Errc::kModulusTooSmall: return "ModulusTooSmall";
    case Errc::kEmptyClause: return "EmptyClause";
    case Errc::kNoVariables: return "NoVariables";
    case Errc::kNotNormalized: return "NotNormalized";
    case Errc::kFalsifies: return "Falsifies";
    case Errc::kNotASolution: return "NotASolution";
    case Errc::kTooManyVariables: return "TooManyVariables";
    case Errc::kProvenanceMismatch: return "ProvenanceMismatch";
    case Errc::kUnboundedVariable: return "UnboundedVariable";
    case Errc::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::kUnprunableUnboundedVariable: return "UnprunableUnboundedVariable";
    case Errc::kCoefficientRangeTooLarge: return "CoefficientRangeTooLarge";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kInternal: return "InternalError";
  }
  return "UnknownError";
}

namespace {

std::string format_message(Errc code, const std::vector<std::size_t>& where,
                           const std::string& detail) {
  std::ostringstream out;
  out << errc_name(code);
  if (!where.empty()) {
    out << '(';
    for (std::size_t k = 0; k < where.size(); ++k) {
      if (k) out << ", ";
      out << where[k];
    }
    out << ')';
  }
  if (!detail.empty()) out << ": " << detail;
  return out.str();
}

}  // namespace

Error::Error(Errc code, std::vector<std::size_t> where, const std::string& detail)
    : std::runtime_error(format_message(code, where, detail)),
      code_(code),
      where_(std::move(where)) {}

}  // namespace sipdepth
