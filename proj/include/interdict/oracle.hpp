#ifndef INTERDICT_ORACLE_HPP
#define INTERDICT_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "interdict/instance.hpp"
#include "interdict/knapsack.hpp"

namespace interdict {

/// Reference result: exhaustive enumeration of all nontrivial bipartitions,
/// each solved with the exact knapsack. Ground truth for tests; shares no
/// code with the engine's enumeration or lambda machinery.
struct OracleReport {
  struct PerCut {
    EdgeSet cut;
    std::vector<VertexId> side;  // shore not containing vertex 0
    std::int64_t g_b = 0;
    EdgeSet removed;
  };

  std::int64_t value = 0;
  EdgeSet best_S;
  EdgeSet best_R;
  std::vector<PerCut> table;
  std::vector<std::pair<Rational, Rational>> lambda_grid;  // (lambda, Phi)
};

inline constexpr int kOracleVertexGuard = 16;

/// Exact optimum by complete enumeration. Throws std::invalid_argument when
/// the vertex count exceeds the guard.
OracleReport brute_solve(const InterdictionInstance& inst,
                         int vertex_guard = kOracleVertexGuard);

/// Phi(lambda) = min over all bipartitions of w_lambda(cut) - lambda*b,
/// computed by full enumeration, independent of the min-cut module.
Rational oracle_phi(const InterdictionInstance& inst, const Rational& lambda,
                    int vertex_guard = kOracleVertexGuard);

/// Samples Phi on the given lambda values (stored into a report's grid).
std::vector<std::pair<Rational, Rational>> oracle_lambda_grid(
    const InterdictionInstance& inst, const std::vector<Rational>& lambdas,
    int vertex_guard = kOracleVertexGuard);

}  // namespace interdict

#endif  // INTERDICT_ORACLE_HPP
