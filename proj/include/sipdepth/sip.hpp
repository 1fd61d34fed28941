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

#ifndef SIPDEPTH_SIP_HPP_
#define SIPDEPTH_SIP_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sipdepth {

using Integer = mpz_class;

/// An integer extended by the two infinities used for box bounds.
class ExtInt {
 public:
  enum class Kind { kNegInf, kFinite, kPosInf };

  ExtInt() = default;
  ExtInt(Integer value) : kind_(Kind::kFinite), value_(std::move(value)) {}
  ExtInt(long value) : kind_(Kind::kFinite), value_(value) {}
  ExtInt(int value) : kind_(Kind::kFinite), value_(value) {}

  static ExtInt neg_inf() { return ExtInt(Kind::kNegInf); }
  static ExtInt pos_inf() { return ExtInt(Kind::kPosInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  bool is_pos_inf() const { return kind_ == Kind::kPosInf; }

  /// Only meaningful when is_finite().
  const Integer& value() const { return value_; }

  friend std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b);
  friend bool operator==(const ExtInt& a, const ExtInt& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
  friend std::strong_ordering operator<=>(const ExtInt& a, const Integer& b) {
    return a <=> ExtInt(b);
  }
  friend bool operator==(const ExtInt& a, const Integer& b) { return a == ExtInt(b); }

  std::string to_string() const;

 private:
  explicit ExtInt(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::kFinite;
  Integer value_ = 0;
};

std::ostream& operator<<(std::ostream& out, const ExtInt& v);

struct Entry {
  std::size_t row = 0;
  std::size_t col = 0;
  Integer value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Coordinate-list integer matrix. Entries are kept row-major sorted once
/// canonicalize() has run; parse_sip and every library producer do so.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Entry> entries;

  void canonicalize();
  SparseMatrix transpose() const;

  /// Column index lists per row / row index lists per column, ascending.
  std::vector<std::vector<std::size_t>> row_supports() const;
  std::vector<std::vector<std::size_t>> col_supports() const;

  /// max |a_ij|, 0 for an empty matrix.
  Integer max_abs() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
};

SparseMatrix make_matrix(std::size_t rows, std::size_t cols,
                         std::vector<Entry> entries);

/// Dense row-major helper; zeros are skipped.
SparseMatrix dense_matrix(const std::vector<std::vector<long>>& rows,
                          std::size_t cols = 0);

/// Feasibility instance {x in Z^n : A x = b, l <= x <= u}.
struct SipInstance {
  SparseMatrix a;
  std::vector<Integer> b;
  std::vector<ExtInt> l;
  std::vector<ExtInt> u;

  std::size_t rows() const { return a.rows; }
  std::size_t cols() const { return a.cols; }

  friend bool operator==(const SipInstance&, const SipInstance&) = default;
};

struct Feasible {
  std::vector<Integer> x;
  friend bool operator==(const Feasible&, const Feasible&) = default;
};
struct Infeasible {
  friend bool operator==(const Infeasible&, const Infeasible&) = default;
};

class SolveResult {
 public:
  SolveResult(Infeasible) {}
  SolveResult(Feasible f) : witness_(std::move(f.x)) {}

  bool feasible() const { return witness_.has_value(); }
  /// Throws std::bad_optional_access on an infeasible result.
  const std::vector<Integer>& witness() const { return witness_.value(); }

  friend bool operator==(const SolveResult&, const SolveResult&) = default;

 private:
  std::optional<std::vector<Integer>> witness_;
};

/// Throws Error on the first violated invariant (dimensions, index range,
/// zero or duplicate entries, crossed bounds).
void validate(const SipInstance& sip);

/// True iff A x = b and l <= x <= u. Throws DimensionMismatch on a wrong
/// length of x.
bool evaluate(const SipInstance& sip, const std::vector<Integer>& x);

/// A x computed exactly; x.size() must equal sip.cols().
std::vector<Integer> multiply(const SparseMatrix& a, const std::vector<Integer>& x);

struct ShiftedSip {
  SipInstance sip;
  std::vector<Integer> offset;
};

/// Substitutes x_i = x'_i + l_i so that every lower bound becomes 0.
ShiftedSip shift_to_zero_lower_bounds(const SipInstance& sip);

SipInstance parse_sip(std::string_view text);
std::string serialize_sip(const SipInstance& sip);

std::vector<Integer> parse_solution(std::string_view text);
std::string serialize_solution(const std::vector<Integer>& x);

}  // namespace sipdepth

#endif  // SIPDEPTH_SIP_HPP_
