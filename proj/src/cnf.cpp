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

#include "sipdepth/cnf.hpp"

#include <algorithm>
#include <sstream>

#include "sipdepth/error.hpp"

namespace sipdepth {

bool satisfies(const Clause& clause, const Assignment& a) {
  return std::any_of(clause.begin(), clause.end(),
                     [&](const Literal& lit) { return a.at(lit.var) == lit.positive; });
}

bool satisfies(const CnfFormula& cnf, const Assignment& a) {
  return std::all_of(cnf.clauses.begin(), cnf.clauses.end(),
                     [&](const Clause& c) { return satisfies(c, a); });
}

CnfFormula normalize(const CnfFormula& cnf, std::vector<std::size_t>* dropped) {
  CnfFormula out{cnf.num_vars, {}};
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
    Clause clause;
    bool tautology = false;
    for (const auto& lit : cnf.clauses[j]) {
      auto same_var = std::find_if(clause.begin(), clause.end(),
                                   [&](const Literal& x) { return x.var == lit.var; });
      if (same_var == clause.end()) {
        clause.push_back(lit);
      } else if (same_var->positive != lit.positive) {
        tautology = true;
      }
    }
    if (tautology) {
      if (dropped) dropped->push_back(j);
      continue;
    }
    out.clauses.push_back(std::move(clause));
  }
  return out;
}

bool is_normalized(const CnfFormula& cnf) {
  for (const auto& clause : cnf.clauses) {
    for (std::size_t x = 0; x < clause.size(); ++x) {
      if (clause[x].var >= cnf.num_vars) return false;
      for (std::size_t y = x + 1; y < clause.size(); ++y) {
        if (clause[x].var == clause[y].var) return false;
      }
    }
  }
  return true;
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula cnf;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  Clause current;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "c") continue;
    if (first == "%") break;  // SATLIB end marker
    if (first == "p") {
      std::string format;
      long long n = -1, m = -1;
      if (have_header || !(tokens >> format >> n >> m) || format != "cnf" || n < 0 || m < 0) {
        throw Error(Errc::kSyntax, {line_no}, "bad problem line: " + line);
      }
      have_header = true;
      cnf.num_vars = static_cast<std::size_t>(n);
      declared_clauses = static_cast<std::size_t>(m);
      continue;
    }
    if (!have_header) throw Error(Errc::kSyntax, {line_no}, "clause before 'p cnf' header");
    std::istringstream values(line);
    std::string token;
    while (values >> token) {
      long long lit = 0;
      std::size_t used = 0;
      try {
        lit = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw Error(Errc::kSyntax, {line_no}, "bad literal: " + token);
      if (lit == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      if (var > cnf.num_vars) {
        throw Error(Errc::kSyntax, {line_no}, "variable " + std::to_string(var) + " out of range");
      }
      current.push_back({var - 1, lit > 0});
    }
  }
  if (!have_header) throw Error(Errc::kSyntax, {line_no}, "missing 'p cnf' header");
  if (!current.empty()) throw Error(Errc::kSyntax, {line_no}, "last clause not terminated by 0");
  if (cnf.clauses.size() != declared_clauses) {
    throw Error(Errc::kSyntax, {line_no},
                "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                    std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

std::string serialize_dimacs(const CnfFormula& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (const auto& lit : clause) {
      out << (lit.positive ? "" : "-") << lit.var + 1 << ' ';
    }
    out << "0\n";
  }
  return out.str();
}

Assignment assignment_from_index(std::uint64_t index, std::size_t num_vars) {
  Assignment a(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) a[i] = (index >> (num_vars - 1 - i)) & 1U;
  return a;
}

std::optional<Assignment> brute_force_sat(const CnfFormula& cnf) {
  const std::uint64_t total = std::uint64_t{1} << cnf.num_vars;
  for (std::uint64_t k = 0; k < total; ++k) {
    auto a = assignment_from_index(k, cnf.num_vars);
    if (satisfies(cnf, a)) return a;
  }
  return std::nullopt;
}

std::uint64_t FormulaGenerator::below(std::uint64_t bound) {
  const std::uint64_t limit = engine_.max() - engine_.max() % bound;
  while (true) {
    const std::uint64_t draw = engine_();
    if (draw < limit) return draw % bound;
  }
}

CnfFormula FormulaGenerator::random_3cnf(std::size_t num_vars, std::size_t num_clauses) {
  CnfFormula cnf{num_vars, {}};
  const std::size_t width = std::min<std::size_t>(3, num_vars);
  for (std::size_t j = 0; j < num_clauses; ++j) {
    Clause clause;
    while (clause.size() < width) {
      const std::size_t var = below(num_vars);
      if (std::any_of(clause.begin(), clause.end(),
                      [&](const Literal& l) { return l.var == var; })) {
        continue;
      }
      clause.push_back({var, below(2) == 1});
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

}  // namespace sipdepth
