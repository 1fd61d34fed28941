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

#include "sipdepth/reduction.hpp"

#include <algorithm>
#include <limits>

#include "json.hpp"
#include "sipdepth/error.hpp"
#include "sipdepth/gaifman.hpp"
#include "sipdepth/numbers.hpp"

namespace sipdepth {

namespace {

std::size_t gadget_width(const Integer& modulus) {
  if (!modulus.fits_ulong_p()) {
    throw Error(Errc::kTooLarge, {}, "gadget width " + modulus.get_str() + " does not fit in memory");
  }
  return modulus.get_ui();
}

}  // namespace

Integer falsifying_value(const Clause& clause, const std::vector<Integer>& primes) {
  CrtSystem sys;
  Integer modulus = 1;
  for (const auto& lit : clause) {
    sys.moduli.push_back(primes.at(lit.var));
    // A positive literal is falsified by false (0), a negative one by true (1).
    sys.residues.push_back(lit.positive ? 0 : 1);
    modulus *= primes.at(lit.var);
  }
  Integer r = crt(sys);
  return r == 0 ? modulus : r;
}

ReductionOutput build_reduction(std::vector<Integer> primes, std::vector<Integer> clause_moduli,
                                std::vector<Integer> forbidden) {
  if (clause_moduli.size() != forbidden.size()) {
    throw Error(Errc::kDimensionMismatch, {clause_moduli.size(), forbidden.size()},
                "one forbidden value per clause required");
  }
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (primes[i] < 2) throw Error(Errc::kModulusTooSmall, {i});
  }
  for (std::size_t j = 0; j < clause_moduli.size(); ++j) {
    if (clause_moduli[j] < 2) throw Error(Errc::kModulusTooSmall, {j});
    if (forbidden[j] < 1 || forbidden[j] > clause_moduli[j]) {
      throw Error(Errc::kResidueOutOfRange, {j}, "forbidden value must lie in [1, M_j]");
    }
  }

  ReductionOutput out;
  out.primes = std::move(primes);
  out.clause_moduli = std::move(clause_moduli);
  out.forbidden = std::move(forbidden);
  const std::size_t n_vars = out.primes.size();
  const std::size_t n_clauses = out.clause_moduli.size();

  // Columns: y, then x-blocks, then z-blocks.
  std::vector<ExtInt> lower, upper;
  auto add_column = [&](ColumnRole role, ExtInt lo, ExtInt hi) {
    out.columns.push_back(role);
    lower.push_back(std::move(lo));
    upper.push_back(std::move(hi));
    return out.columns.size() - 1;
  };
  out.y_col = add_column({ColumnRole::Kind::kY, 0, 0}, ExtInt::neg_inf(), ExtInt::pos_inf());
  for (std::size_t i = 0; i < n_vars; ++i) {
    const std::size_t p = gadget_width(out.primes[i]);
    std::vector<std::size_t> cols;
    cols.push_back(add_column({ColumnRole::Kind::kX, i, 0}, ExtInt(0), ExtInt(1)));
    for (std::size_t ell = 1; ell <= p; ++ell) {
      cols.push_back(
          add_column({ColumnRole::Kind::kX, i, ell}, ExtInt::neg_inf(), ExtInt::pos_inf()));
    }
    out.x_cols.push_back(std::move(cols));
  }
  for (std::size_t j = 0; j < n_clauses; ++j) {
    const std::size_t width = gadget_width(out.clause_moduli[j]);
    const Integer& d = out.forbidden[j];
    std::vector<std::size_t> cols;
    cols.push_back(add_column({ColumnRole::Kind::kZ, j, 0}, ExtInt(Integer(d + 1)),
                              ExtInt(Integer(out.clause_moduli[j] + d - 1))));
    for (std::size_t ell = 1; ell <= width; ++ell) {
      cols.push_back(
          add_column({ColumnRole::Kind::kZ, j, ell}, ExtInt::neg_inf(), ExtInt::pos_inf()));
    }
    out.z_cols.push_back(std::move(cols));
  }

  // Rows in the fixed order: x-equalities, x-mods, z-equalities, z-mods.
  std::vector<Entry> entries;
  auto equality_rows = [&](RowRole::Kind kind, const std::vector<std::vector<std::size_t>>& blocks) {
    for (std::size_t g = 0; g < blocks.size(); ++g) {
      const auto& cols = blocks[g];
      for (std::size_t ell = 2; ell < cols.size(); ++ell) {
        const std::size_t row = out.rows.size();
        out.rows.push_back({kind, g, ell});
        entries.push_back({row, cols[1], Integer(1)});
        entries.push_back({row, cols[ell], Integer(-1)});
      }
    }
  };
  auto mod_rows = [&](RowRole::Kind kind, const std::vector<std::vector<std::size_t>>& blocks,
                      std::vector<std::size_t>& index) {
    for (std::size_t g = 0; g < blocks.size(); ++g) {
      const auto& cols = blocks[g];
      const std::size_t row = out.rows.size();
      out.rows.push_back({kind, g, 0});
      index.push_back(row);
      entries.push_back({row, out.y_col, Integer(-1)});
      entries.push_back({row, cols[0], Integer(1)});
      for (std::size_t ell = 1; ell < cols.size(); ++ell) {
        entries.push_back({row, cols[ell], Integer(-1)});
      }
    }
  };
  equality_rows(RowRole::Kind::kEqXEqual, out.x_cols);
  mod_rows(RowRole::Kind::kEqXMod, out.x_cols, out.x_mod_row);
  equality_rows(RowRole::Kind::kEqZEqual, out.z_cols);
  mod_rows(RowRole::Kind::kEqZMod, out.z_cols, out.z_mod_row);

  out.sip.a = make_matrix(out.rows.size(), out.columns.size(), std::move(entries));
  out.sip.b.assign(out.rows.size(), Integer(0));
  out.sip.l = std::move(lower);
  out.sip.u = std::move(upper);
  out.certificate = certificate_forest(out);
  return out;
}

ReductionOutput reduce(const CnfFormula& cnf) {
  if (cnf.num_vars == 0) throw Error(Errc::kNoVariables, {});
  if (!is_normalized(cnf)) throw Error(Errc::kNotNormalized, {}, "normalize the formula first");
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
    if (cnf.clauses[j].empty()) throw Error(Errc::kEmptyClause, {j});
  }
  std::vector<Integer> primes;
  for (auto p : nth_primes(cnf.num_vars)) primes.emplace_back(static_cast<unsigned long>(p));
  std::vector<Integer> moduli, forbidden;
  for (const auto& clause : cnf.clauses) {
    Integer modulus = 1;
    for (const auto& lit : clause) modulus *= primes[lit.var];
    moduli.push_back(modulus);
    forbidden.push_back(falsifying_value(clause, primes));
  }
  return build_reduction(std::move(primes), std::move(moduli), std::move(forbidden));
}

EliminationForest certificate_forest(const ReductionOutput& out) {
  const SparseMatrix& a = out.sip.a;
  EliminationForest f;
  f.parent.assign(a.rows + a.cols, std::nullopt);
  const Vertex y = col_vertex(a, out.y_col);
  auto hang_gadget = [&](std::size_t mod_row, const std::vector<std::size_t>& cols,
                         auto equality_row_of) {
    const Vertex mod = row_vertex(a, mod_row);
    const Vertex first = col_vertex(a, cols[1]);
    f.parent[mod] = y;
    f.parent[first] = mod;
    f.parent[col_vertex(a, cols[0])] = first;
    for (std::size_t ell = 2; ell < cols.size(); ++ell) {
      const Vertex eq = row_vertex(a, equality_row_of(ell));
      f.parent[eq] = first;
      f.parent[col_vertex(a, cols[ell])] = eq;
    }
  };
  // Equality rows of one gadget are consecutive; locate the first of each block.
  std::size_t next_row = 0;
  std::vector<std::size_t> x_first(out.x_cols.size()), z_first(out.z_cols.size());
  for (std::size_t i = 0; i < out.x_cols.size(); ++i) {
    x_first[i] = next_row;
    next_row += out.x_cols[i].size() - 2;
  }
  next_row += out.x_cols.size();
  for (std::size_t j = 0; j < out.z_cols.size(); ++j) {
    z_first[j] = next_row;
    next_row += out.z_cols[j].size() - 2;
  }
  for (std::size_t i = 0; i < out.x_cols.size(); ++i) {
    hang_gadget(out.x_mod_row[i], out.x_cols[i],
                [&](std::size_t ell) { return x_first[i] + ell - 2; });
  }
  for (std::size_t j = 0; j < out.z_cols.size(); ++j) {
    hang_gadget(out.z_mod_row[j], out.z_cols[j],
                [&](std::size_t ell) { return z_first[j] + ell - 2; });
  }
  return f;
}

namespace {

Integer encode_assignment(const ReductionOutput& out, const Assignment& a) {
  if (a.size() != out.primes.size()) {
    throw Error(Errc::kDimensionMismatch, {a.size(), out.primes.size()},
                "assignment length must equal the number of formula variables");
  }
  CrtSystem sys{out.primes, {}};
  for (bool v : a) sys.residues.emplace_back(v ? 1 : 0);
  return crt(sys);
}

// Index of the first clause whose forbidden residue equals y, or npos.
std::size_t first_falsified(const ReductionOutput& out, const Integer& y) {
  for (std::size_t j = 0; j < out.clause_moduli.size(); ++j) {
    if (floor_mod(y, out.clause_moduli[j]) == floor_mod(out.forbidden[j], out.clause_moduli[j])) {
      return j;
    }
  }
  return std::numeric_limits<std::size_t>::max();
}

std::vector<Integer> lift_from_y(const ReductionOutput& out, const Assignment& a, const Integer& y) {
  std::vector<Integer> x(out.columns.size(), 0);
  x[out.y_col] = y;
  for (std::size_t i = 0; i < out.x_cols.size(); ++i) {
    const auto& cols = out.x_cols[i];
    const Integer x0 = a[i] ? 1 : 0;
    Integer step = x0 - y;
    mpz_divexact(step.get_mpz_t(), step.get_mpz_t(), out.primes[i].get_mpz_t());
    x[cols[0]] = x0;
    for (std::size_t ell = 1; ell < cols.size(); ++ell) x[cols[ell]] = step;
  }
  for (std::size_t j = 0; j < out.z_cols.size(); ++j) {
    const auto& cols = out.z_cols[j];
    const Integer& modulus = out.clause_moduli[j];
    const Integer low = out.forbidden[j] + 1;
    // The box [d+1, M+d-1] holds one representative of every residue but d.
    const Integer z0 = low + floor_mod(y - low, modulus);
    Integer step = z0 - y;
    mpz_divexact(step.get_mpz_t(), step.get_mpz_t(), modulus.get_mpz_t());
    x[cols[0]] = z0;
    for (std::size_t ell = 1; ell < cols.size(); ++ell) x[cols[ell]] = step;
  }
  return x;
}

}  // namespace

std::vector<Integer> lift_assignment(const ReductionOutput& out, const Assignment& a) {
  const Integer y = encode_assignment(out, a);
  const std::size_t j = first_falsified(out, y);
  if (j != std::numeric_limits<std::size_t>::max()) throw Error(Errc::kFalsifies, {j});
  return lift_from_y(out, a, y);
}

Assignment extract_assignment(const ReductionOutput& out, const std::vector<Integer>& x) {
  if (x.size() != out.sip.cols() || !evaluate(out.sip, x)) throw Error(Errc::kNotASolution, {});
  Assignment a(out.primes.size());
  const Integer& y = x[out.y_col];
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = floor_mod(y, out.primes[i]) == 1;
  return a;
}

SolveResult decide_reduction(const ReductionOutput& out) {
  const std::size_t n = out.primes.size();
  if (n > kDecideReductionCap) throw Error(Errc::kTooManyVariables, {n});
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 0; k < total; ++k) {
    const Assignment a = assignment_from_index(k, n);
    const Integer y = encode_assignment(out, a);
    if (first_falsified(out, y) != std::numeric_limits<std::size_t>::max()) continue;
    auto x = lift_from_y(out, a, y);
    if (evaluate(out.sip, x)) return Feasible{std::move(x)};
  }
  return Infeasible{};
}

Integer expected_rows(const ReductionOutput& out) {
  Integer total = 0;
  for (const auto& p : out.primes) total += p;
  for (const auto& m : out.clause_moduli) total += m;
  return total;
}

Integer expected_cols(const ReductionOutput& out) {
  Integer total = 1;
  for (const auto& p : out.primes) total += p + 1;
  for (const auto& m : out.clause_moduli) total += m + 1;
  return total;
}

// ---------------------------------------------------------------------------

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Integer integer_of(const Json& j) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw Error(Errc::kSyntax, {}, "expected an integer in provenance");
}

}  // namespace

std::string serialize_provenance(const ReductionOutput& out) {
  Json j;
  j["y"] = out.y_col;
  Json x = Json::object(), z = Json::object();
  for (std::size_t i = 0; i < out.x_cols.size(); ++i) x[std::to_string(i)] = out.x_cols[i];
  for (std::size_t k = 0; k < out.z_cols.size(); ++k) z[std::to_string(k)] = out.z_cols[k];
  j["x"] = std::move(x);
  j["z"] = std::move(z);
  Json primes = Json::array(), forbidden = Json::array();
  for (const auto& p : out.primes) primes.push_back(to_json(p));
  for (const auto& d : out.forbidden) forbidden.push_back(to_json(d));
  j["primes"] = std::move(primes);
  j["forbidden"] = std::move(forbidden);
  return j.dump() + "\n";
}

ReductionOutput parse_provenance(std::string_view text, const SipInstance& sip) {
  Json j;
  std::vector<Integer> primes, moduli, forbidden;
  std::size_t y_col = 0;
  std::vector<std::vector<std::size_t>> x_cols, z_cols;
  try {
    j = Json::parse(text);
    y_col = j.at("y").get<std::size_t>();
    for (const auto& p : j.at("primes")) primes.push_back(integer_of(p));
    for (const auto& d : j.at("forbidden")) forbidden.push_back(integer_of(d));
    const auto& x = j.at("x");
    const auto& z = j.at("z");
    for (std::size_t i = 0; i < x.size(); ++i) {
      x_cols.push_back(x.at(std::to_string(i)).get<std::vector<std::size_t>>());
    }
    for (std::size_t k = 0; k < z.size(); ++k) {
      z_cols.push_back(z.at(std::to_string(k)).get<std::vector<std::size_t>>());
      if (z_cols.back().empty()) throw Error(Errc::kSyntax, {k}, "empty clause gadget");
      moduli.emplace_back(static_cast<unsigned long>(z_cols.back().size() - 1));
    }
  } catch (const Json::exception& e) {
    throw Error(Errc::kSyntax, {}, e.what());
  }
  ReductionOutput out = build_reduction(std::move(primes), std::move(moduli), std::move(forbidden));
  if (out.y_col != y_col || out.x_cols != x_cols || out.z_cols != z_cols) {
    throw Error(Errc::kProvenanceMismatch, {}, "column map differs from the canonical layout");
  }
  SipInstance canonical = sip;
  canonical.a.canonicalize();
  if (!(out.sip == canonical)) {
    throw Error(Errc::kProvenanceMismatch, {}, "instance is not the one the provenance describes");
  }
  return out;
}

}  // namespace sipdepth
