#include "interdict/instance.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

namespace interdict {

EdgeSet::EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool EdgeSet::contains(EdgeId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::string EdgeSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(ids_[i]);
  }
  out += "}";
  return out;
}

InterdictionInstance::InterdictionInstance(int vertex_count,
                                           std::vector<Edge> edges,
                                           std::int64_t budget)
    : vertex_count_(vertex_count), edges_(std::move(edges)), budget_(budget) {
  if (vertex_count_ < 2)
    throw std::invalid_argument("instance: need at least 2 vertices");
  if (budget_ < 0) throw std::invalid_argument("instance: negative budget");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.id != static_cast<EdgeId>(i))
      throw std::invalid_argument("instance: edge ids must be 0..m-1 in order");
    if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_)
      throw std::invalid_argument("instance: endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("instance: self-loop");
    if (e.weight < 0) throw std::invalid_argument("instance: negative weight");
    if (e.cost < 1) throw std::invalid_argument("instance: cost must be >= 1");
  }
}

std::vector<std::int64_t> InterdictionInstance::weight_vector() const {
  std::vector<std::int64_t> w(edges_.size());
  for (const Edge& e : edges_) w[std::size_t(e.id)] = e.weight;
  return w;
}

std::vector<std::int64_t> InterdictionInstance::cost_vector() const {
  std::vector<std::int64_t> c(edges_.size());
  for (const Edge& e : edges_) c[std::size_t(e.id)] = e.cost;
  return c;
}

namespace {

bool is_skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;  // blank
}

std::int64_t parse_int(const std::string& tok, int line, const char* what) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected integer for ") + what +
                               ", got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line, std::string("trailing characters after ") + what +
                               " in '" + tok + "'");
  return v;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

}  // namespace

InterdictionInstance InterdictionInstance::parse(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = 0;
  std::int64_t m = 0, b = 0;
  bool got_header = false;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++lineno;
    if (is_skippable(line)) continue;
    auto toks = split_tokens(line);
    if (!got_header) {
      if (toks.size() != 3)
        throw ParseError(lineno, "header must be 'n m b'");
      n = static_cast<int>(parse_int(toks[0], lineno, "n"));
      m = parse_int(toks[1], lineno, "m");
      b = parse_int(toks[2], lineno, "b");
      if (n < 2) throw ParseError(lineno, "need at least 2 vertices");
      if (m < 0) throw ParseError(lineno, "negative edge count");
      if (b < 0) throw ParseError(lineno, "negative budget");
      got_header = true;
      continue;
    }
    if (static_cast<std::int64_t>(edges.size()) == m)
      throw ParseError(lineno, "more edge lines than declared in header");
    if (toks.size() != 4)
      throw ParseError(lineno, "edge line must be 'u v w c'");
    const std::int64_t u = parse_int(toks[0], lineno, "u");
    const std::int64_t v = parse_int(toks[1], lineno, "v");
    const std::int64_t w = parse_int(toks[2], lineno, "w");
    const std::int64_t c = parse_int(toks[3], lineno, "c");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(lineno, "vertex index out of range 1..n");
    if (u == v) throw ParseError(lineno, "self-loop rejected");
    if (w < 0) throw ParseError(lineno, "negative weight");
    if (c < 1) throw ParseError(lineno, "cost must be >= 1");
    Edge e;
    e.id = static_cast<EdgeId>(edges.size());
    e.u = static_cast<VertexId>(u - 1);
    e.v = static_cast<VertexId>(v - 1);
    e.weight = w;
    e.cost = c;
    edges.push_back(e);
  }
  if (!got_header) throw ParseError(lineno == 0 ? 1 : lineno, "empty input");
  if (static_cast<std::int64_t>(edges.size()) != m)
    throw ParseError(lineno, "declared " + std::to_string(m) +
                                 " edges, found " +
                                 std::to_string(edges.size()));
  return InterdictionInstance(n, std::move(edges), b);
}

InterdictionInstance InterdictionInstance::parse_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse(in);
}

std::string InterdictionInstance::format() const {
  std::ostringstream out;
  out << vertex_count_ << ' ' << edges_.size() << ' ' << budget_ << '\n';
  for (const Edge& e : edges_) {
    out << (e.u + 1) << ' ' << (e.v + 1) << ' ' << e.weight << ' ' << e.cost
        << '\n';
  }
  return out.str();
}

std::vector<Rational> truncate_weights(const std::vector<std::int64_t>& w,
                                       const std::vector<std::int64_t>& c,
                                       const Rational& lambda) {
  if (lambda.is_negative())
    throw std::domain_error("truncate_weights: negative lambda");
  std::vector<Rational> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Rational priced = lambda * Rational{c[i]};
    Rational kept{w[i]};
    out.push_back(priced < kept ? std::move(priced) : std::move(kept));
  }
  return out;
}

std::vector<Rational> truncate_weights(const InterdictionInstance& inst,
                                       const Rational& lambda) {
  return truncate_weights(inst.weight_vector(), inst.cost_vector(), lambda);
}

Rational set_weight(const EdgeSet& s, const std::vector<Rational>& weights) {
  Rational total;
  for (EdgeId id : s) {
    if (id < 0 || std::size_t(id) >= weights.size())
      throw std::out_of_range("set_weight: edge id out of range");
    total += weights[std::size_t(id)];
  }
  return total;
}

Rational set_weight(const InterdictionInstance& inst, const EdgeSet& s,
                    const std::vector<Rational>& weights) {
  if (weights.size() != std::size_t(inst.edge_count()))
    throw std::invalid_argument("set_weight: weight vector size mismatch");
  return set_weight(s, weights);
}

std::int64_t set_cost(const EdgeSet& s,
                      const std::vector<std::int64_t>& costs) {
  __int128 total = 0;
  for (EdgeId id : s) {
    if (id < 0 || std::size_t(id) >= costs.size())
      throw std::out_of_range("set_cost: edge id out of range");
    total += costs[std::size_t(id)];
  }
  if (total > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("set_cost: sum exceeds int64");
  return static_cast<std::int64_t>(total);
}

std::int64_t set_cost(const InterdictionInstance& inst, const EdgeSet& s) {
  return set_cost(s, inst.cost_vector());
}

}  // namespace interdict
