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

#include "sipdepth/sip.hpp"

#include <algorithm>
#include <limits>
#include <tuple>
#include <sstream>

#include "json.hpp"
#include "sipdepth/error.hpp"

namespace sipdepth {

using Json = nlohmann::ordered_json;

std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
  if (a.kind_ != b.kind_) {
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  }
  if (!a.is_finite()) return std::strong_ordering::equal;
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string ExtInt::to_string() const {
  switch (kind_) {
    case Kind::kNegInf: return "-inf";
    case Kind::kPosInf: return "+inf";
    case Kind::kFinite: break;
  }
  return value_.get_str();
}

std::ostream& operator<<(std::ostream& out, const ExtInt& v) { return out << v.to_string(); }

void SparseMatrix::canonicalize() {
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    return std::tie(x.row, x.col) < std::tie(y.row, y.col);
  });
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t{cols, rows, {}};
  t.entries.reserve(entries.size());
  for (const auto& e : entries) t.entries.push_back({e.col, e.row, e.value});
  t.canonicalize();
  return t;
}

std::vector<std::vector<std::size_t>> SparseMatrix::row_supports() const {
  std::vector<std::vector<std::size_t>> out(rows);
  for (const auto& e : entries) out[e.row].push_back(e.col);
  for (auto& s : out) std::sort(s.begin(), s.end());
  return out;
}

std::vector<std::vector<std::size_t>> SparseMatrix::col_supports() const {
  std::vector<std::vector<std::size_t>> out(cols);
  for (const auto& e : entries) out[e.col].push_back(e.row);
  for (auto& s : out) std::sort(s.begin(), s.end());
  return out;
}

Integer SparseMatrix::max_abs() const {
  Integer best = 0;
  for (const auto& e : entries) {
    Integer v = abs(e.value);
    if (v > best) best = v;
  }
  return best;
}

SparseMatrix make_matrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries) {
  SparseMatrix m{rows, cols, std::move(entries)};
  m.canonicalize();
  return m;
}

SparseMatrix dense_matrix(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  SparseMatrix m;
  m.rows = rows.size();
  m.cols = cols;
  for (const auto& r : rows) m.cols = std::max(m.cols, r.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] != 0) m.entries.push_back({i, j, Integer(rows[i][j])});
    }
  }
  return m;
}

void validate(const SipInstance& sip) {
  const auto& a = sip.a;
  if (sip.b.size() != a.rows) {
    throw Error(Errc::kDimensionMismatch, {}, "b has " + std::to_string(sip.b.size()) +
                                                  " entries, matrix has " +
                                                  std::to_string(a.rows) + " rows");
  }
  if (sip.l.size() != a.cols || sip.u.size() != a.cols) {
    throw Error(Errc::kDimensionMismatch, {}, "bound vectors must have one entry per column");
  }
  for (const auto& e : a.entries) {
    if (e.row >= a.rows || e.col >= a.cols) {
      throw Error(Errc::kIndexOutOfRange, {e.row, e.col});
    }
    if (e.value == 0) throw Error(Errc::kZeroEntry, {e.row, e.col});
  }
  std::vector<std::pair<std::size_t, std::size_t>> coords;
  coords.reserve(a.entries.size());
  for (const auto& e : a.entries) coords.emplace_back(e.row, e.col);
  std::sort(coords.begin(), coords.end());
  auto dup = std::adjacent_find(coords.begin(), coords.end());
  if (dup != coords.end()) throw Error(Errc::kDuplicateEntry, {dup->first, dup->second});
  for (std::size_t i = 0; i < a.cols; ++i) {
    if (sip.l[i] > sip.u[i]) throw Error(Errc::kCrossedBounds, {i});
  }
}

std::vector<Integer> multiply(const SparseMatrix& a, const std::vector<Integer>& x) {
  if (x.size() != a.cols) {
    throw Error(Errc::kDimensionMismatch, {}, "vector length " + std::to_string(x.size()) +
                                                  " != columns " + std::to_string(a.cols));
  }
  std::vector<Integer> out(a.rows, 0);
  for (const auto& e : a.entries) out[e.row] += e.value * x[e.col];
  return out;
}

bool evaluate(const SipInstance& sip, const std::vector<Integer>& x) {
  const auto ax = multiply(sip.a, x);
  if (sip.b.size() != ax.size()) throw Error(Errc::kDimensionMismatch, {});
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sip.l[i] > x[i] || sip.u[i] < x[i]) return false;
  }
  return ax == sip.b;
}

ShiftedSip shift_to_zero_lower_bounds(const SipInstance& sip) {
  ShiftedSip out{sip, {}};
  out.offset.reserve(sip.cols());
  for (std::size_t i = 0; i < sip.cols(); ++i) {
    if (!sip.l[i].is_finite()) throw Error(Errc::kInfiniteLowerBound, {i});
    out.offset.push_back(sip.l[i].value());
  }
  const auto a_l = multiply(sip.a, out.offset);
  for (std::size_t r = 0; r < sip.rows(); ++r) out.sip.b[r] = sip.b[r] - a_l[r];
  for (std::size_t i = 0; i < sip.cols(); ++i) {
    out.sip.l[i] = ExtInt(0);
    if (sip.u[i].is_finite()) out.sip.u[i] = ExtInt(Integer(sip.u[i].value() - out.offset[i]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

[[noreturn]] void syntax(const std::string& what) { throw Error(Errc::kSyntax, {}, what); }

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Integer integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    Integer v;
    if (s.empty() || v.set_str(s, 10) != 0) syntax(path + ": not an integer: \"" + s + "\"");
    return v;
  }
  syntax(path + ": expected an integer");
}

Json ext_to_json(const ExtInt& v) {
  if (v.is_finite()) return integer_to_json(v.value());
  return Json(v.to_string());
}

ExtInt ext_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "-inf") return ExtInt::neg_inf();
    if (s == "+inf") return ExtInt::pos_inf();
  }
  return ExtInt(integer_from_json(j, path));
}

std::size_t count_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    syntax(path + ": expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

const Json& member(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) syntax(std::string("missing key \"") + key + "\"");
  return *it;
}

const Json& array_member(const Json& obj, const char* key) {
  const auto& j = member(obj, key);
  if (!j.is_array()) syntax(std::string("\"") + key + "\" must be an array");
  return j;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into line/column.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(Errc::kSyntax, {line, column}, e.what());
  }
}

}  // namespace

SipInstance parse_sip(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) syntax("top level must be an object");
  SipInstance sip;
  sip.a.rows = count_from_json(member(j, "rows"), "rows");
  sip.a.cols = count_from_json(member(j, "cols"), "cols");
  const auto& entries = array_member(j, "entries");
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& t = entries[k];
    const std::string path = "entries[" + std::to_string(k) + "]";
    if (!t.is_array() || t.size() != 3) syntax(path + ": expected a triple [row, col, value]");
    sip.a.entries.push_back({count_from_json(t[0], path + "[0]"),
                             count_from_json(t[1], path + "[1]"),
                             integer_from_json(t[2], path + "[2]")});
  }
  const auto& b = array_member(j, "b");
  for (std::size_t k = 0; k < b.size(); ++k) {
    sip.b.push_back(integer_from_json(b[k], "b[" + std::to_string(k) + "]"));
  }
  const auto& l = array_member(j, "l");
  for (std::size_t k = 0; k < l.size(); ++k) {
    sip.l.push_back(ext_from_json(l[k], "l[" + std::to_string(k) + "]"));
  }
  const auto& u = array_member(j, "u");
  for (std::size_t k = 0; k < u.size(); ++k) {
    sip.u.push_back(ext_from_json(u[k], "u[" + std::to_string(k) + "]"));
  }
  sip.a.canonicalize();
  validate(sip);
  return sip;
}

std::string serialize_sip(const SipInstance& sip) {
  SparseMatrix a = sip.a;
  a.canonicalize();
  Json j;
  j["rows"] = a.rows;
  j["cols"] = a.cols;
  Json entries = Json::array();
  for (const auto& e : a.entries) {
    entries.push_back(Json::array({e.row, e.col, integer_to_json(e.value)}));
  }
  j["entries"] = std::move(entries);
  Json b = Json::array();
  for (const auto& v : sip.b) b.push_back(integer_to_json(v));
  j["b"] = std::move(b);
  Json l = Json::array(), u = Json::array();
  for (const auto& v : sip.l) l.push_back(ext_to_json(v));
  for (const auto& v : sip.u) u.push_back(ext_to_json(v));
  j["l"] = std::move(l);
  j["u"] = std::move(u);
  return j.dump() + "\n";
}

std::vector<Integer> parse_solution(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) syntax("top level must be an object");
  const auto& x = array_member(j, "x");
  std::vector<Integer> out;
  out.reserve(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    out.push_back(integer_from_json(x[k], "x[" + std::to_string(k) + "]"));
  }
  return out;
}

std::string serialize_solution(const std::vector<Integer>& x) {
  Json arr = Json::array();
  for (const auto& v : x) arr.push_back(integer_to_json(v));
  Json j;
  j["x"] = std::move(arr);
  return j.dump() + "\n";
}

}  // namespace sipdepth
