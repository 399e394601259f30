#ifndef INTERDICT_CUT_ENUM_HPP
#define INTERDICT_CUT_ENUM_HPP

#include <cstdint>
#include <vector>

#include "interdict/min_cut.hpp"

namespace interdict {

/// All nontrivial cuts whose capacity passes a threshold test, deduplicated
/// by canonical bipartition and sorted by (value, shore).
struct CutFamily {
  enum class Method { exhaustive, contraction };

  std::vector<CutResult> cuts;
  Rational threshold;
  bool strict = true;
  Method method = Method::exhaustive;
  std::int64_t repetitions = 0;  // contraction only
  std::uint64_t seed = 0;        // contraction only
};

/// Complete enumeration of all 2^(n-1)-1 bipartitions. Every cut passing the
/// threshold test is present; complete by construction. Throws
/// std::invalid_argument when n exceeds `exhaustive_limit`.
CutFamily enumerate_exhaustive(int vertex_count,
                               const std::vector<Edge>& edges,
                               const std::vector<Rational>& capacities,
                               const Rational& threshold, bool strict,
                               int exhaustive_limit = 20);

struct ContractionOptions {
  double delta = 0;  // failure probability; <= 0 means 1/n
  std::int64_t repetition_budget = 1'000'000;
  int threads = 1;
};

/// Repeated randomized contraction: each repetition contracts edges with
/// probability proportional to capacity until ceil(2*alpha) supervertices
/// remain, then tests all bipartitions of the supervertices. Candidates are
/// re-verified exactly before insertion, so randomness affects completeness
/// only, never soundness. With the default repetition count the family is
/// complete with probability >= 1 - delta. Requires a positive min cut.
CutFamily enumerate_contraction(int vertex_count,
                                const std::vector<Edge>& edges,
                                const std::vector<Rational>& capacities,
                                const Rational& threshold, bool strict,
                                const Rational& alpha, std::uint64_t seed,
                                const ContractionOptions& options = {});

}  // namespace interdict

#endif  // INTERDICT_CUT_ENUM_HPP
