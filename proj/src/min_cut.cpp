#include "interdict/min_cut.hpp"

#include <algorithm>
#include <stdexcept>

namespace interdict {

namespace {

void validate(int n, const std::vector<Edge>& edges,
              const std::vector<Rational>& capacities) {
  if (n < 2) throw std::invalid_argument("global_min_cut: need n >= 2");
  if (capacities.size() != edges.size())
    throw std::invalid_argument("global_min_cut: capacity vector size");
  for (const Rational& c : capacities)
    if (c.is_negative())
      throw std::invalid_argument("global_min_cut: negative capacity");
}

std::vector<VertexId> canonical_side(int n, std::vector<VertexId> side) {
  std::sort(side.begin(), side.end());
  if (!side.empty() && side.front() == 0) {
    std::vector<VertexId> complement;
    complement.reserve(std::size_t(n) - side.size());
    std::size_t k = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (k < side.size() && side[k] == v)
        ++k;
      else
        complement.push_back(v);
    }
    return complement;
  }
  return side;
}

}  // namespace

CutResult cut_from_side(int n, const std::vector<Edge>& edges,
                        const std::vector<Rational>& capacities,
                        std::vector<VertexId> side) {
  validate(n, edges, capacities);
  side = canonical_side(n, std::move(side));
  if (side.empty() || side.size() == std::size_t(n))
    throw std::invalid_argument("cut_from_side: trivial bipartition");
  std::vector<char> in_side(std::size_t(n), 0);
  for (VertexId v : side) in_side.at(std::size_t(v)) = 1;
  std::vector<EdgeId> crossing;
  Rational value;
  for (const Edge& e : edges) {
    if (in_side[std::size_t(e.u)] != in_side[std::size_t(e.v)]) {
      crossing.push_back(e.id);
      value += capacities[std::size_t(e.id)];
    }
  }
  return CutResult{std::move(value), std::move(side), EdgeSet{std::move(crossing)}};
}

CutResult global_min_cut(int n, const std::vector<Edge>& edges,
                         const std::vector<Rational>& capacities) {
  validate(n, edges, capacities);
  const std::size_t un = static_cast<std::size_t>(n);

  // Merged capacity matrix; parallel edges collapse to one entry.
  std::vector<std::vector<Rational>> cap(un, std::vector<Rational>(un));
  for (const Edge& e : edges) {
    cap[std::size_t(e.u)][std::size_t(e.v)] += capacities[std::size_t(e.id)];
    cap[std::size_t(e.v)][std::size_t(e.u)] += capacities[std::size_t(e.id)];
  }

  // merged[v] = original vertices currently fused into v.
  std::vector<std::vector<VertexId>> merged(un);
  for (VertexId v = 0; v < n; ++v) merged[std::size_t(v)] = {v};
  std::vector<char> alive(un, 1);

  bool have_best = false;
  Rational best_value;
  std::vector<VertexId> best_side;

  for (int remaining = n; remaining > 1; --remaining) {
    // Maximum adjacency search over the alive vertices.
    std::vector<char> in_order(un, 0);
    std::vector<Rational> key(un);
    int start = -1;
    for (int v = 0; v < n; ++v)
      if (alive[std::size_t(v)]) {
        start = v;
        break;
      }
    in_order[std::size_t(start)] = 1;
    for (int v = 0; v < n; ++v)
      if (alive[std::size_t(v)] && v != start)
        key[std::size_t(v)] = cap[std::size_t(start)][std::size_t(v)];

    int prev = start;
    int last = start;
    Rational cut_of_phase;
    for (int step = 1; step < remaining; ++step) {
      int pick = -1;
      for (int v = 0; v < n; ++v) {
        if (!alive[std::size_t(v)] || in_order[std::size_t(v)]) continue;
        if (pick < 0 || key[std::size_t(pick)] < key[std::size_t(v)]) pick = v;
      }
      in_order[std::size_t(pick)] = 1;
      prev = last;
      last = pick;
      cut_of_phase = key[std::size_t(pick)];
      for (int v = 0; v < n; ++v)
        if (alive[std::size_t(v)] && !in_order[std::size_t(v)])
          key[std::size_t(v)] += cap[std::size_t(pick)][std::size_t(v)];
    }

    if (!have_best || cut_of_phase < best_value) {
      have_best = true;
      best_value = cut_of_phase;
      best_side = merged[std::size_t(last)];
    }

    // Fuse `last` into `prev`.
    alive[std::size_t(last)] = 0;
    auto& dst = merged[std::size_t(prev)];
    auto& src = merged[std::size_t(last)];
    dst.insert(dst.end(), src.begin(), src.end());
    src.clear();
    for (int v = 0; v < n; ++v) {
      if (!alive[std::size_t(v)] || v == prev) continue;
      cap[std::size_t(prev)][std::size_t(v)] +=
          cap[std::size_t(last)][std::size_t(v)];
      cap[std::size_t(v)][std::size_t(prev)] =
          cap[std::size_t(prev)][std::size_t(v)];
    }
  }

  CutResult result = cut_from_side(n, edges, capacities, std::move(best_side));
  if (!(result.value == best_value))
    throw std::logic_error(
        "global_min_cut: phase value does not match recomputed cut value");
  return result;
}

}  // namespace interdict
