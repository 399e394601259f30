#include "interdict/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace interdict {

namespace {

void check_guard(const InterdictionInstance& inst, int guard) {
  if (inst.vertex_count() > std::min(guard, 25))
    throw std::invalid_argument(
        "oracle: vertex count " + std::to_string(inst.vertex_count()) +
        " exceeds the brute-force guard of " + std::to_string(guard));
}

// Calls fn(side_vertices, crossing_edges) for every nontrivial bipartition;
// `side` is the shore not containing vertex 0.
template <typename Fn>
void for_each_bipartition(const InterdictionInstance& inst, Fn fn) {
  const int n = inst.vertex_count();
  const std::uint32_t mask_end = std::uint32_t{1} << (n - 1);
  for (std::uint32_t mask = 1; mask < mask_end; ++mask) {
    auto in_side = [mask](VertexId v) {
      return v != 0 && ((mask >> (v - 1)) & 1u) != 0;
    };
    std::vector<VertexId> side;
    for (VertexId v = 1; v < n; ++v)
      if (in_side(v)) side.push_back(v);
    std::vector<EdgeId> crossing;
    for (const Edge& e : inst.edges())
      if (in_side(e.u) != in_side(e.v)) crossing.push_back(e.id);
    fn(std::move(side), EdgeSet{std::move(crossing)});
  }
}

}  // namespace

OracleReport brute_solve(const InterdictionInstance& inst, int vertex_guard) {
  check_guard(inst, vertex_guard);
  OracleReport report;
  bool have_best = false;
  for_each_bipartition(inst, [&](std::vector<VertexId> side, EdgeSet cut) {
    DeletionResult del =
        knapsack_exact(items_for(inst, cut), inst.budget());
    OracleReport::PerCut entry{std::move(cut), std::move(side), del.residual,
                               del.removed};
    if (!have_best || entry.g_b < report.value) {
      have_best = true;
      report.value = entry.g_b;
      report.best_S = entry.cut;
      report.best_R = entry.removed;
    }
    report.table.push_back(std::move(entry));
  });
  return report;
}

Rational oracle_phi(const InterdictionInstance& inst, const Rational& lambda,
                    int vertex_guard) {
  check_guard(inst, vertex_guard);
  const std::vector<Rational> truncated = truncate_weights(inst, lambda);
  bool have_min = false;
  Rational best;
  for_each_bipartition(inst, [&](std::vector<VertexId>, EdgeSet cut) {
    Rational v = set_weight(cut, truncated);
    if (!have_min || v < best) {
      have_min = true;
      best = std::move(v);
    }
  });
  return best - lambda * Rational{inst.budget()};
}

std::vector<std::pair<Rational, Rational>> oracle_lambda_grid(
    const InterdictionInstance& inst, const std::vector<Rational>& lambdas,
    int vertex_guard) {
  std::vector<std::pair<Rational, Rational>> grid;
  grid.reserve(lambdas.size());
  for (const Rational& lambda : lambdas)
    grid.emplace_back(lambda, oracle_phi(inst, lambda, vertex_guard));
  return grid;
}

}  // namespace interdict
