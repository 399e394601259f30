#include "interdict/generator.hpp"

#include <stdexcept>

#include "interdict/rng.hpp"

namespace interdict {

InterdictionInstance generate_instance(const GenParams& p) {
  if (p.n < 2) throw std::invalid_argument("generate: need n >= 2");
  if (p.m < p.n - 1)
    throw std::invalid_argument("generate: need m >= n - 1 for connectivity");
  if (p.wmax < 0 || p.cmax < 1 || p.bmax < 0)
    throw std::invalid_argument("generate: bad weight/cost/budget bounds");

  SplitMix64 rng(SplitMix64::scramble(p.seed ^ 0x1d87f5a6c3b209efull));
  std::vector<Edge> edges;
  edges.reserve(std::size_t(p.m));

  // Random-attachment spanning tree, then extra (possibly parallel) edges.
  for (int v = 1; v < p.n; ++v) {
    Edge e;
    e.id = static_cast<EdgeId>(edges.size());
    e.u = static_cast<VertexId>(rng.below(std::uint64_t(v)));
    e.v = static_cast<VertexId>(v);
    edges.push_back(e);
  }
  for (int i = p.n - 1; i < p.m; ++i) {
    Edge e;
    e.id = static_cast<EdgeId>(edges.size());
    e.u = static_cast<VertexId>(rng.below(std::uint64_t(p.n)));
    std::uint64_t other = rng.below(std::uint64_t(p.n - 1));
    if (other >= std::uint64_t(e.u)) ++other;
    e.v = static_cast<VertexId>(other);
    edges.push_back(e);
  }
  for (Edge& e : edges) {
    e.weight = static_cast<std::int64_t>(rng.below(std::uint64_t(p.wmax) + 1));
    e.cost = 1 + static_cast<std::int64_t>(rng.below(std::uint64_t(p.cmax)));
  }
  const std::int64_t budget =
      static_cast<std::int64_t>(rng.below(std::uint64_t(p.bmax) + 1));
  return InterdictionInstance(p.n, std::move(edges), budget);
}

}  // namespace interdict
