#ifndef INTERDICT_INSTANCE_HPP
#define INTERDICT_INSTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "interdict/rational.hpp"

namespace interdict {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

/// Undirected multigraph edge with an objective weight and an interdiction
/// cost. Ids are dense 0-based positions in the instance edge list.
struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;
  std::int64_t weight = 0;  // w(e) >= 0
  std::int64_t cost = 1;    // c(e) >= 1
};

/// Sorted duplicate-free set of edge ids. Ordered lexicographically by its
/// id sequence, which is the canonical tie-break order used throughout.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<EdgeId> ids);

  bool contains(EdgeId id) const;
  const std::vector<EdgeId>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  auto operator<=>(const EdgeSet&) const = default;

  std::string to_string() const;  // "{0, 2, 5}"

 private:
  std::vector<EdgeId> ids_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A budget-constrained interdiction instance over an undirected multigraph.
/// Immutable after construction; all members validated.
class InterdictionInstance {
 public:
  InterdictionInstance(int vertex_count, std::vector<Edge> edges,
                       std::int64_t budget);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(std::size_t(id)); }
  std::int64_t budget() const { return budget_; }

  std::vector<std::int64_t> weight_vector() const;
  std::vector<std::int64_t> cost_vector() const;

  /// Text format: first line "n m b", then m lines "u v w c" with 1-based
  /// vertex indices. Lines starting with '#' and blank lines are skipped.
  /// Throws ParseError (carrying the 1-based file line) on malformed input.
  static InterdictionInstance parse(std::istream& in);
  static InterdictionInstance parse_file(const std::string& path);
  std::string format() const;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::int64_t budget_;
};

/// Truncated weights w_lambda(e) = min{w(e), lambda * c(e)}, indexed by edge
/// id. Throws std::domain_error for lambda < 0.
std::vector<Rational> truncate_weights(const InterdictionInstance& inst,
                                       const Rational& lambda);
std::vector<Rational> truncate_weights(const std::vector<std::int64_t>& w,
                                       const std::vector<std::int64_t>& c,
                                       const Rational& lambda);

/// Exact weight of an edge set under the given per-edge values.
Rational set_weight(const EdgeSet& s, const std::vector<Rational>& weights);
Rational set_weight(const InterdictionInstance& inst, const EdgeSet& s,
                    const std::vector<Rational>& weights);

/// Exact interdiction cost c(S). Throws std::out_of_range on a bad id and
/// std::overflow_error if the sum leaves int64 range.
std::int64_t set_cost(const InterdictionInstance& inst, const EdgeSet& s);
std::int64_t set_cost(const EdgeSet& s, const std::vector<std::int64_t>& costs);

}  // namespace interdict

#endif  // INTERDICT_INSTANCE_HPP
