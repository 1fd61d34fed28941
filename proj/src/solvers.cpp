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

#include "sipdepth/solvers.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>

#include "sipdepth/error.hpp"
#include "sipdepth/gaifman.hpp"

namespace sipdepth {

namespace {

using i64 = std::int64_t;

i64 checked_add(i64 a, i64 b) {
  i64 out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::kCoefficientRangeTooLarge, {});
  return out;
}

i64 checked_mul(i64 a, i64 b) {
  i64 out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::kCoefficientRangeTooLarge, {});
  return out;
}

i64 to_i64(const Integer& v) {
  if (!v.fits_slong_p()) throw Error(Errc::kCoefficientRangeTooLarge, {}, v.get_str());
  return v.get_si();
}

struct ColumnEntry {
  std::size_t row;
  i64 coef;
};

std::vector<std::vector<ColumnEntry>> columns_of(const SparseMatrix& a) {
  std::vector<std::vector<ColumnEntry>> cols(a.cols);
  for (const auto& e : a.entries) cols[e.col].push_back({e.row, to_i64(e.value)});
  return cols;
}

void require_witness(const SipInstance& sip, const std::vector<Integer>& x) {
  if (!evaluate(sip, x)) throw Error(Errc::kInternal, {}, "solver produced an invalid witness");
}

}  // namespace

// ---------------------------------------------------------------------------
// Brute force

SolveResult brute_force(const SipInstance& sip) {
  const std::size_t n = sip.cols();
  Integer points = 1;
  std::vector<i64> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!sip.l[i].is_finite() || !sip.u[i].is_finite()) throw Error(Errc::kUnboundedVariable, {i});
    if (sip.l[i] > sip.u[i]) return Infeasible{};
    points *= sip.u[i].value() - sip.l[i].value() + 1;
    if (points > kBruteForceMaxPoints) throw Error(Errc::kSearchSpaceTooLarge, {});
    lo[i] = to_i64(sip.l[i].value());
    hi[i] = to_i64(sip.u[i].value());
  }
  const auto cols = columns_of(sip.a);
  std::vector<i64> residual(sip.rows());
  for (std::size_t r = 0; r < sip.rows(); ++r) residual[r] = to_i64(sip.b[r]);
  // Start every column at its lower bound and walk the box like an odometer,
  // the last column moving fastest, so the first hit is lexicographically least.
  std::vector<i64> x(lo);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : cols[i]) {
      residual[e.row] = checked_add(residual[e.row], -checked_mul(e.coef, x[i]));
    }
  }
  while (true) {
    if (std::all_of(residual.begin(), residual.end(), [](i64 v) { return v == 0; })) {
      std::vector<Integer> w(x.begin(), x.end());
      require_witness(sip, w);
      return Feasible{std::move(w)};
    }
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        for (const auto& e : cols[i]) residual[e.row] = checked_add(residual[e.row], -e.coef);
        break;
      }
      // Wrap column i back to its lower bound.
      const i64 span = hi[i] - lo[i];
      for (const auto& e : cols[i]) {
        residual[e.row] = checked_add(residual[e.row], checked_mul(e.coef, span));
      }
      x[i] = lo[i];
      if (i == 0) return Infeasible{};
    }
    if (n == 0) return Infeasible{};
  }
}

// ---------------------------------------------------------------------------
// Few-rows dynamic program

namespace {

// Integer or one of the infinities; only used for clipping intervals.
struct Bound {
  bool infinite = false;
  i64 value = 0;
};

using State = std::vector<i64>;

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (i64 v : s) h ^= std::hash<i64>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

constexpr std::size_t kMaxLayerStates = 20'000'000;

}  // namespace

SolveResult solve_few_rows(const SipInstance& sip) {
  validate(sip);
  const ShiftedSip shifted = shift_to_zero_lower_bounds(sip);
  const SipInstance& s = shifted.sip;
  const std::size_t m = s.rows();
  const std::size_t n = s.cols();
  const auto cols = columns_of(s.a);
  std::vector<i64> b(m);
  for (std::size_t r = 0; r < m; ++r) b[r] = to_i64(s.b[r]);
  std::vector<std::optional<i64>> upper(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (s.u[i].is_finite()) upper[i] = to_i64(s.u[i].value());
  }

  // Extreme contributions of columns t..n-1 per row (min_future <= 0 <= max_future).
  std::vector<std::vector<Bound>> min_future(n + 1, std::vector<Bound>(m));
  std::vector<std::vector<Bound>> max_future(n + 1, std::vector<Bound>(m));
  for (std::size_t t = n; t-- > 0;) {
    min_future[t] = min_future[t + 1];
    max_future[t] = max_future[t + 1];
    for (const auto& e : cols[t]) {
      Bound& low = min_future[t][e.row];
      Bound& high = max_future[t][e.row];
      if (!upper[t]) {
        (e.coef < 0 ? low : high).infinite = true;
        continue;
      }
      const i64 extreme = checked_mul(e.coef, *upper[t]);
      if (extreme < 0 && !low.infinite) low.value = checked_add(low.value, extreme);
      if (extreme > 0 && !high.infinite) high.value = checked_add(high.value, extreme);
    }
  }
  // Admissible interval for coordinate r once columns 0..t-1 are fixed.
  auto admissible = [&](std::size_t t, std::size_t r) {
    Bound lo{max_future[t][r].infinite, 0}, hi{min_future[t][r].infinite, 0};
    if (!lo.infinite) lo.value = checked_add(b[r], -max_future[t][r].value);
    if (!hi.infinite) hi.value = checked_add(b[r], -min_future[t][r].value);
    return std::pair{lo, hi};
  };

  struct Node {
    std::size_t parent;
    i64 value;
  };
  std::vector<std::vector<State>> layer_states(n + 1);
  std::vector<std::vector<Node>> layer_nodes(n + 1);

  State origin(m, 0);
  for (std::size_t r = 0; r < m; ++r) {
    const auto [lo, hi] = admissible(0, r);
    if ((!lo.infinite && origin[r] < lo.value) || (!hi.infinite && origin[r] > hi.value)) {
      return Infeasible{};
    }
  }
  layer_states[0].push_back(origin);
  layer_nodes[0].push_back({0, 0});

  for (std::size_t t = 0; t < n; ++t) {
    std::unordered_map<State, std::size_t, StateHash> index;
    auto& next_states = layer_states[t + 1];
    auto& next_nodes = layer_nodes[t + 1];
    const auto& column = cols[t];
    std::vector<std::pair<Bound, Bound>> window;
    for (const auto& e : column) window.push_back(admissible(t + 1, e.row));

    for (std::size_t k = 0; k < layer_states[t].size(); ++k) {
      const State& state = layer_states[t][k];
      i64 x_min = 0;
      std::optional<i64> x_max = upper[t];
      if (column.empty()) x_max = 0;  // every value leads to the same state
      for (std::size_t c = 0; c < column.size(); ++c) {
        const auto& e = column[c];
        const auto& [lo, hi] = window[c];
        const i64 cur = state[e.row];
        // Need lo <= cur + coef * x <= hi.
        std::optional<i64> from, to;
        if (e.coef > 0) {
          if (!lo.infinite) from = ceil_div(checked_add(lo.value, -cur), e.coef);
          if (!hi.infinite) to = floor_div(checked_add(hi.value, -cur), e.coef);
        } else {
          if (!hi.infinite) from = ceil_div(checked_add(hi.value, -cur), e.coef);
          if (!lo.infinite) to = floor_div(checked_add(lo.value, -cur), e.coef);
        }
        if (from) x_min = std::max(x_min, *from);
        if (to) x_max = x_max ? std::min(*x_max, *to) : *to;
      }
      if (!x_max) throw Error(Errc::kUnprunableUnboundedVariable, {t});
      for (i64 x = x_min; x <= *x_max; ++x) {
        State next = state;
        for (const auto& e : column) next[e.row] = checked_add(next[e.row], checked_mul(e.coef, x));
        auto [it, inserted] = index.try_emplace(std::move(next), next_states.size());
        if (inserted) {
          next_states.push_back(it->first);
          next_nodes.push_back({k, x});
          if (next_states.size() > kMaxLayerStates) throw Error(Errc::kSearchSpaceTooLarge, {t});
        }
      }
    }
    if (next_states.empty()) return Infeasible{};
  }

  // The last window is [b, b]; any surviving state is b itself.
  const auto& last = layer_states[n];
  if (last.empty() || last[0] != b) return Infeasible{};
  std::vector<Integer> x(n);
  std::size_t k = 0;
  for (std::size_t t = n; t-- > 0;) {
    const Node& node = layer_nodes[t + 1][k];
    x[t] = Integer(static_cast<long>(node.value)) + shifted.offset[t];
    k = node.parent;
  }
  require_witness(sip, x);
  return Feasible{std::move(x)};
}

// ---------------------------------------------------------------------------
// Vertex cover

namespace {

struct CoverState {
  std::vector<char> alive;
  std::vector<std::size_t> degree;
  std::vector<Vertex> chosen;
  std::size_t edges = 0;
};

class CoverSearch {
 public:
  explicit CoverSearch(const Graph& g) : g_(g) {}

  std::optional<std::vector<Vertex>> at_most(std::size_t k) {
    CoverState st;
    st.alive.assign(g_.size(), 1);
    st.degree.resize(g_.size());
    for (Vertex v = 0; v < g_.size(); ++v) st.degree[v] = g_.degree(v);
    st.edges = g_.edge_count();
    return branch(std::move(st), static_cast<long>(k));
  }

 private:
  void take(CoverState& st, Vertex v) {
    st.alive[v] = 0;
    st.chosen.push_back(v);
    for (Vertex w : g_.neighbors(v)) {
      if (st.alive[w]) {
        --st.degree[w];
        --st.edges;
      }
    }
    st.degree[v] = 0;
  }

  // Degree-0 vertices leave; the neighbor of a degree-1 vertex joins the cover.
  bool reduce(CoverState& st, long& budget) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v = 0; v < g_.size(); ++v) {
        if (!st.alive[v]) continue;
        if (st.degree[v] == 0) {
          st.alive[v] = 0;
          changed = true;
        } else if (st.degree[v] == 1) {
          const Vertex u = *std::find_if(g_.neighbors(v).begin(), g_.neighbors(v).end(),
                                         [&](Vertex w) { return st.alive[w] != 0; });
          take(st, u);
          if (--budget < 0) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  std::optional<std::vector<Vertex>> branch(CoverState st, long budget) {
    if (!reduce(st, budget)) return std::nullopt;
    if (st.edges == 0) return std::move(st.chosen);
    if (budget == 0) return std::nullopt;
    std::size_t max_degree = 0;
    for (Vertex v = 0; v < g_.size(); ++v) {
      if (st.alive[v]) max_degree = std::max(max_degree, st.degree[v]);
    }
    if (st.edges > static_cast<std::size_t>(budget) * max_degree) return std::nullopt;
    Vertex u = 0;
    while (!st.alive[u] || st.degree[u] == 0) ++u;
    const Vertex v = *std::find_if(g_.neighbors(u).begin(), g_.neighbors(u).end(),
                                   [&](Vertex w) { return st.alive[w] != 0; });
    for (Vertex pick : {u, v}) {
      CoverState child = st;
      take(child, pick);
      if (auto found = branch(std::move(child), budget - 1)) return found;
    }
    return std::nullopt;
  }

  const Graph& g_;
};

}  // namespace

std::vector<Vertex> min_vertex_cover(const Graph& g) {
  CoverSearch search(g);
  for (std::size_t k = 0; k <= kVertexCoverBudget; ++k) {
    if (auto cover = search.at_most(k)) {
      std::sort(cover->begin(), cover->end());
      return *cover;
    }
  }
  throw Error(Errc::kBudgetExceeded, {kVertexCoverBudget});
}

// ---------------------------------------------------------------------------
// Rational row elimination

namespace {

// Incremental echelon basis over Q; each stored row has a 1 at its pivot and
// zeros at the pivots of the rows stored before it.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width) : width_(width) {}

  /// Reduces `v` in place against the basis.
  void reduce(std::vector<mpq_class>& v) const {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      const mpq_class factor = v[pivot];
      for (std::size_t c = 0; c < width_; ++c) {
        if (row[c] != 0) v[c] -= factor * row[c];
      }
    }
  }

  /// Adds a reduced vector with pivot column `pivot`, scaled so the pivot is 1.
  void add(std::vector<mpq_class> v, std::size_t pivot) {
    const mpq_class scale = v[pivot];
    for (auto& value : v) value /= scale;
    rows_.emplace_back(pivot, std::move(v));
  }

  std::size_t size() const { return rows_.size(); }

 private:
  std::size_t width_;
  std::vector<std::pair<std::size_t, std::vector<mpq_class>>> rows_;
};

std::vector<std::vector<mpq_class>> dense_rows(const SparseMatrix& a, std::size_t width) {
  std::vector<std::vector<mpq_class>> rows(a.rows, std::vector<mpq_class>(width, 0));
  for (const auto& e : a.entries) rows[e.row][e.col] = mpq_class(e.value);
  return rows;
}

std::optional<std::size_t> first_nonzero(const std::vector<mpq_class>& v, std::size_t limit) {
  for (std::size_t c = 0; c < limit; ++c) {
    if (v[c] != 0) return c;
  }
  return std::nullopt;
}

}  // namespace

RowBasisResult remove_dependent_rows(const SipInstance& sip) {
  const std::size_t n = sip.cols();
  auto rows = dense_rows(sip.a, n + 1);
  for (std::size_t r = 0; r < sip.rows(); ++r) rows[r][n] = mpq_class(sip.b[r]);
  EchelonBasis basis(n + 1);
  Reduced out;
  for (std::size_t r = 0; r < sip.rows(); ++r) {
    auto v = rows[r];
    basis.reduce(v);
    const auto pivot = first_nonzero(v, n);
    if (!pivot) {
      if (v[n] != 0) return Inconsistent{r};
      continue;
    }
    basis.add(std::move(v), *pivot);
    out.kept_rows.push_back(r);
  }
  std::vector<std::size_t> new_index(sip.rows(), sip.rows());
  for (std::size_t k = 0; k < out.kept_rows.size(); ++k) new_index[out.kept_rows[k]] = k;
  out.sip.a.rows = out.kept_rows.size();
  out.sip.a.cols = n;
  for (const auto& e : sip.a.entries) {
    if (new_index[e.row] != sip.rows()) out.sip.a.entries.push_back({new_index[e.row], e.col, e.value});
  }
  out.sip.a.canonicalize();
  for (std::size_t r : out.kept_rows) out.sip.b.push_back(sip.b[r]);
  out.sip.l = sip.l;
  out.sip.u = sip.u;
  return out;
}

std::size_t rational_rank(const SparseMatrix& a) {
  auto rows = dense_rows(a, a.cols);
  EchelonBasis basis(a.cols);
  for (auto& v : rows) {
    basis.reduce(v);
    if (const auto pivot = first_nonzero(v, a.cols)) basis.add(std::move(v), *pivot);
  }
  return basis.size();
}

SolveResult solve_vertex_cover(const SipInstance& sip, VertexCoverSolveInfo* info) {
  validate(sip);
  for (std::size_t i = 0; i < sip.cols(); ++i) {
    if (!sip.l[i].is_finite()) throw Error(Errc::kInfiniteLowerBound, {i});
  }
  auto basis = remove_dependent_rows(sip);
  if (std::holds_alternative<Inconsistent>(basis)) return Infeasible{};
  const Reduced& reduced = std::get<Reduced>(basis);
  const auto cover = min_vertex_cover(incidence_graph(reduced.sip.a));
  if (info) {
    info->rows_after_reduction = reduced.sip.rows();
    info->cover_size = cover.size();
  }
  // Rows outside the cover only touch columns inside it, and they are
  // independent, so there are at most |cover| of them.
  if (reduced.sip.rows() > 2 * cover.size()) {
    throw Error(Errc::kInternal, {reduced.sip.rows(), cover.size()},
                "independent row count exceeds twice the vertex cover number");
  }
  SolveResult result = solve_few_rows(reduced.sip);
  if (result.feasible()) require_witness(sip, result.witness());
  return result;
}

}  // namespace sipdepth
