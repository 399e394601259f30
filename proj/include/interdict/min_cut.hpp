#ifndef INTERDICT_MIN_CUT_HPP
#define INTERDICT_MIN_CUT_HPP

#include <vector>

#include "interdict/instance.hpp"
#include "interdict/rational.hpp"

namespace interdict {

/// One shore of a global minimum cut together with its crossing edges.
/// Canonical form: `side` is the shore that does NOT contain vertex 0, so
/// equal bipartitions compare equal. `cut_edges` lists every original edge
/// with exactly one endpoint in `side`; `value` is their capacity sum.
struct CutResult {
  Rational value;
  std::vector<VertexId> side;  // sorted, non-empty, excludes vertex 0
  EdgeSet cut_edges;
};

/// Exact global minimum cut of an undirected multigraph under non-negative
/// rational capacities (Stoer-Wagner, maximum adjacency search). Parallel
/// edges are merged internally; the reported cut_edges use original ids.
/// Disconnected graphs yield value 0. Throws std::invalid_argument for
/// n < 2 or a negative capacity.
CutResult global_min_cut(int vertex_count, const std::vector<Edge>& edges,
                         const std::vector<Rational>& capacities);

/// Recomputes the crossing edges and capacity of the bipartition given by
/// `side` (interpreted as one shore). Used to validate CutResult instances.
CutResult cut_from_side(int vertex_count, const std::vector<Edge>& edges,
                        const std::vector<Rational>& capacities,
                        std::vector<VertexId> side);

}  // namespace interdict

#endif  // INTERDICT_MIN_CUT_HPP
