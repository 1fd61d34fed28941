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

// sipdepth command-line tool.
//
// Exit codes: 0 success (FEASIBLE, valid), 1 negative answer (INFEASIBLE,
// invalid solution, forest violation, roundtrip mismatch), 2 unreadable or
// malformed input, 3 empty clause, 4 solver or size precondition, 5 internal.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sipdepth/cnf.hpp"
#include "sipdepth/error.hpp"
#include "sipdepth/gaifman.hpp"
#include "sipdepth/reduction.hpp"
#include "sipdepth/solvers.hpp"
#include "sipdepth/treedepth.hpp"

namespace {

using namespace sipdepth;

constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitEmptyClause = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitInternal = 5;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::kSyntax:
    case Errc::kDimensionMismatch:
    case Errc::kIndexOutOfRange:
    case Errc::kZeroEntry:
    case Errc::kDuplicateEntry:
    case Errc::kCrossedBounds:
    case Errc::kProvenanceMismatch:
      return kExitInput;
    case Errc::kEmptyClause:
      return kExitEmptyClause;
    case Errc::kInternal:
      return kExitInternal;
    default:
      return kExitPrecondition;
  }
}

// ---------------------------------------------------------------------------

struct ReduceArgs {
  std::string cnf, out, provenance, certificate;
};

int cmd_reduce(const ReduceArgs& args) {
  std::vector<std::size_t> dropped;
  const auto cnf = normalize(parse_dimacs(read_file(args.cnf)), &dropped);
  for (auto j : dropped) std::cerr << "note: dropped tautological clause " << j + 1 << "\n";
  const auto out = reduce(cnf);
  if (!args.out.empty()) write_file(args.out, serialize_sip(out.sip));
  if (!args.provenance.empty()) write_file(args.provenance, serialize_provenance(out));
  if (!args.certificate.empty()) write_file(args.certificate, serialize_forest(out.certificate));
  const auto depth = check_forest(incidence_graph(out.sip.a), out.certificate);
  std::cout << "rows=" << out.sip.rows() << " cols=" << out.sip.cols() << " depth=" << depth
            << " max_abs_entry=" << out.sip.a.max_abs() << "\n";
  return 0;
}

struct AnalyzeArgs {
  std::string sip;
  bool exact_td = false;
};

int cmd_analyze(const AnalyzeArgs& args) {
  const auto sip = parse_sip(read_file(args.sip));
  const auto stats = degree_stats(sip.a);
  const auto incidence = incidence_graph(sip.a);
  std::cout << "rows=" << sip.rows() << "\n"
            << "cols=" << sip.cols() << "\n"
            << "max_abs_entry=" << sip.a.max_abs() << "\n"
            << "maxdeg_C=" << stats.maxdeg_c << "\n"
            << "maxdeg_V=" << stats.maxdeg_v << "\n"
            << "components_incidence=" << component_count(incidence) << "\n"
            << "components_primal=" << component_count(primal_graph(sip.a)) << "\n"
            << "components_dual=" << component_count(dual_graph(sip.a)) << "\n";
  if (args.exact_td) {
    const auto td = exact_treedepth(incidence).depth;
    std::cout << "td_incidence=" << td << "\n";
  }
  return 0;
}

struct SolveArgs {
  std::string sip, method = "brute", provenance, out;
};

int cmd_solve(const SolveArgs& args) {
  const auto sip = parse_sip(read_file(args.sip));
  if (args.method == "reduction-y" && args.provenance.empty()) {
    std::cerr << "error: --method reduction-y needs --provenance\n";
    return kExitInput;
  }
  const SolveResult result = [&] {
    if (args.method == "brute") return brute_force(sip);
    if (args.method == "few-rows") return solve_few_rows(sip);
    if (args.method == "vertex-cover") return solve_vertex_cover(sip);
    return decide_reduction(parse_provenance(read_file(args.provenance), sip));
  }();
  if (!result.feasible()) {
    std::cout << "INFEASIBLE\n";
    return kExitNo;
  }
  if (!args.out.empty()) write_file(args.out, serialize_solution(result.witness()));
  std::cout << "FEASIBLE\n";
  return 0;
}

int cmd_verify(const std::string& sip_path, const std::string& solution_path) {
  const auto sip = parse_sip(read_file(sip_path));
  const auto x = parse_solution(read_file(solution_path));
  if (x.size() != sip.cols()) {
    std::cout << "INVALID: expected " << sip.cols() << " values, got " << x.size() << "\n";
    return kExitNo;
  }
  const bool ok = evaluate(sip, x);
  std::cout << (ok ? "VALID" : "INVALID") << "\n";
  return ok ? 0 : kExitNo;
}

int cmd_check_forest(const std::string& sip_path, const std::string& forest_path,
                     const std::string& kind) {
  const auto sip = parse_sip(read_file(sip_path));
  const auto forest = parse_forest(read_file(forest_path));
  const Graph g = kind == "primal" ? primal_graph(sip.a)
                  : kind == "dual" ? dual_graph(sip.a)
                                   : incidence_graph(sip.a);
  try {
    const auto depth = check_forest(g, forest);
    std::cout << "depth=" << depth << "\n";
    return 0;
  } catch (const Error& e) {
    if (e.code() == Errc::kDimensionMismatch) throw;
    std::cout << "violation: " << e.what() << "\n";
    return kExitNo;
  }
}

struct RoundtripArgs {
  std::size_t vars = 4, clauses = 4, count = 100;
  std::uint64_t seed = 1;
};

int cmd_roundtrip(const RoundtripArgs& args) {
  FormulaGenerator gen(args.seed);
  std::size_t agree = 0;
  for (std::size_t k = 0; k < args.count; ++k) {
    const auto phi = gen.random_3cnf(args.vars, args.clauses);
    const auto out = reduce(phi);
    const bool sat = brute_force_sat(phi).has_value();
    const auto decided = decide_reduction(out);
    const bool ok = decided.feasible() == sat &&
                    (!decided.feasible() || evaluate(out.sip, decided.witness()));
    if (ok) {
      ++agree;
    } else {
      std::cerr << "mismatch on formula " << k << ":\n" << serialize_dimacs(phi);
    }
  }
  std::cout << agree << "/" << args.count << " agree\n";
  return agree == args.count ? 0 : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Standard-form integer programs, Gaifman graphs and treedepth"};
  app.require_subcommand(1);

  ReduceArgs reduce_args;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a DIMACS 3-CNF formula to an integer program");
  reduce_cmd->add_option("cnf", reduce_args.cnf, "DIMACS input")->required();
  reduce_cmd->add_option("-o,--out", reduce_args.out, "SIP JSON output");
  reduce_cmd->add_option("--provenance", reduce_args.provenance, "provenance JSON output");
  reduce_cmd->add_option("--certificate", reduce_args.certificate, "elimination forest JSON output");

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Print matrix and Gaifman graph statistics");
  analyze_cmd->add_option("sip", analyze_args.sip, "SIP JSON input")->required();
  analyze_cmd->add_flag("--exact-td", analyze_args.exact_td, "also compute the incidence treedepth");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Decide feasibility");
  solve_cmd->add_option("sip", solve_args.sip, "SIP JSON input")->required();
  solve_cmd->add_option("--method", solve_args.method, "solver")
      ->check(CLI::IsMember({"brute", "few-rows", "vertex-cover", "reduction-y"}));
  solve_cmd->add_option("--provenance", solve_args.provenance, "provenance JSON (reduction-y)");
  solve_cmd->add_option("-o,--out", solve_args.out, "solution JSON output");

  std::string verify_sip, verify_solution;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution against an instance");
  verify_cmd->add_option("sip", verify_sip, "SIP JSON input")->required();
  verify_cmd->add_option("solution", verify_solution, "solution JSON input")->required();

  std::string forest_sip, forest_path, forest_graph = "incidence";
  auto* forest_cmd = app.add_subcommand("check-forest", "Validate an elimination forest");
  forest_cmd->add_option("sip", forest_sip, "SIP JSON input")->required();
  forest_cmd->add_option("forest", forest_path, "forest JSON input")->required();
  forest_cmd->add_option("--graph", forest_graph, "Gaifman graph")
      ->check(CLI::IsMember({"incidence", "primal", "dual"}));

  RoundtripArgs roundtrip_args;
  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Compare the reduction with brute-force SAT");
  roundtrip_cmd->add_option("--vars", roundtrip_args.vars)->check(CLI::Range(1, 20));
  roundtrip_cmd->add_option("--clauses", roundtrip_args.clauses);
  roundtrip_cmd->add_option("--seed", roundtrip_args.seed);
  roundtrip_cmd->add_option("--count", roundtrip_args.count);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*reduce_cmd) return cmd_reduce(reduce_args);
    if (*analyze_cmd) return cmd_analyze(analyze_args);
    if (*solve_cmd) return cmd_solve(solve_args);
    if (*verify_cmd) return cmd_verify(verify_sip, verify_solution);
    if (*forest_cmd) return cmd_check_forest(forest_sip, forest_path, forest_graph);
    return cmd_roundtrip(roundtrip_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
