#include "interdict/cut_enum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "interdict/rng.hpp"

namespace interdict {

namespace {

constexpr std::int64_t kIntPathSumBound = std::int64_t{1} << 62;

void validate_inputs(int n, const std::vector<Edge>& edges,
                     const std::vector<Rational>& capacities) {
  if (n < 2) throw std::invalid_argument("cut enumeration: need n >= 2");
  if (capacities.size() != edges.size())
    throw std::invalid_argument("cut enumeration: capacity vector size");
  for (const Rational& c : capacities)
    if (c.is_negative())
      throw std::invalid_argument("cut enumeration: negative capacity");
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  return (a / BigInt::gcd(a, b)) * b;
}

// Capacities rescaled to a common integer denominator so that crossing sums
// and threshold tests run on int64/int128. Falls back to exact rational
// sums when anything leaves int64 range; both paths are exact.
struct ScaledCaps {
  bool int_path = false;
  std::vector<std::int64_t> num;
  std::int64_t den = 1;
  std::int64_t t_num = 0;
  std::int64_t t_den = 1;
  const std::vector<Rational>* caps = nullptr;
  const Rational* threshold = nullptr;
  bool strict = true;

  template <typename CrossFn>
  bool passes(const std::vector<Edge>& edges, CrossFn crosses) const {
    if (int_path) {
      __int128 sum = 0;
      for (const Edge& e : edges)
        if (crosses(e)) sum += num[std::size_t(e.id)];
      const __int128 lhs = sum * t_den;
      const __int128 rhs = static_cast<__int128>(t_num) * den;
      return strict ? lhs < rhs : lhs <= rhs;
    }
    Rational sum;
    for (const Edge& e : edges)
      if (crosses(e)) sum += (*caps)[std::size_t(e.id)];
    return strict ? sum < *threshold : sum <= *threshold;
  }
};

ScaledCaps build_scaled(const std::vector<Rational>& caps,
                        const Rational& threshold, bool strict) {
  ScaledCaps sc;
  sc.caps = &caps;
  sc.threshold = &threshold;
  sc.strict = strict;

  BigInt common{1};
  for (const Rational& c : caps) common = lcm(common, c.den());
  if (!common.fits_int64()) return sc;
  if (!threshold.num().fits_int64() || !threshold.den().fits_int64())
    return sc;
  const std::int64_t den = common.to_int64();
  const std::int64_t t_num = threshold.num().to_int64();
  const std::int64_t t_den = threshold.den().to_int64();
  if (den > kIntPathSumBound || t_den > kIntPathSumBound ||
      std::llabs(t_num) > kIntPathSumBound)
    return sc;

  std::vector<std::int64_t> nums;
  nums.reserve(caps.size());
  __int128 total = 0;
  for (const Rational& c : caps) {
    const BigInt scaled = c.num() * (common / c.den());
    if (!scaled.fits_int64()) return sc;
    const std::int64_t v = scaled.to_int64();
    nums.push_back(v);
    total += v;
    if (total > kIntPathSumBound) return sc;
  }
  sc.int_path = true;
  sc.num = std::move(nums);
  sc.den = den;
  sc.t_num = t_num;
  sc.t_den = t_den;
  return sc;
}

bool cut_less(const CutResult& a, const CutResult& b) {
  if (a.value != b.value) return a.value < b.value;
  return a.side < b.side;
}

}  // namespace

CutFamily enumerate_exhaustive(int n, const std::vector<Edge>& edges,
                               const std::vector<Rational>& capacities,
                               const Rational& threshold, bool strict,
                               int exhaustive_limit) {
  validate_inputs(n, edges, capacities);
  if (n > exhaustive_limit || n > 63)
    throw std::invalid_argument(
        "enumerate_exhaustive: vertex count exceeds the exhaustive limit; "
        "use enumerate_contraction");

  const ScaledCaps sc = build_scaled(capacities, threshold, strict);
  CutFamily family;
  family.threshold = threshold;
  family.strict = strict;
  family.method = CutFamily::Method::exhaustive;

  const std::uint64_t mask_end = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 1; mask < mask_end; ++mask) {
    // Bit i means vertex i+1 is in the shore; vertex 0 never is.
    auto in_side = [mask](VertexId v) {
      return v != 0 && ((mask >> (v - 1)) & 1u) != 0;
    };
    const bool pass = sc.passes(
        edges, [&](const Edge& e) { return in_side(e.u) != in_side(e.v); });
    if (!pass) continue;
    std::vector<VertexId> side;
    for (VertexId v = 1; v < n; ++v)
      if (in_side(v)) side.push_back(v);
    family.cuts.push_back(cut_from_side(n, edges, capacities, std::move(side)));
  }
  std::sort(family.cuts.begin(), family.cuts.end(), cut_less);
  return family;
}

namespace {

struct Dsu {
  std::vector<std::int32_t> parent;
  void reset(int n) {
    parent.resize(std::size_t(n));
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::int32_t find(std::int32_t x) {
    while (parent[std::size_t(x)] != x) {
      parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
      x = parent[std::size_t(x)];
    }
    return x;
  }
  bool unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::size_t(b)] = a;
    return true;
  }
};

using SideKey = std::vector<std::uint64_t>;

struct SideKeyHash {
  std::size_t operator()(const SideKey& k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : k) h = SplitMix64::scramble(h ^ w);
    return static_cast<std::size_t>(h);
  }
};

struct FoundCut {
  SideKey key;
  std::vector<VertexId> side;
};

}  // namespace

CutFamily enumerate_contraction(int n, const std::vector<Edge>& edges,
                                const std::vector<Rational>& capacities,
                                const Rational& threshold, bool strict,
                                const Rational& alpha, std::uint64_t seed,
                                const ContractionOptions& options) {
  validate_inputs(n, edges, capacities);
  if (!(alpha > Rational{0}))
    throw std::invalid_argument("enumerate_contraction: alpha must be > 0");

  const CutResult mc = global_min_cut(n, edges, capacities);
  if (mc.value.is_zero())
    throw std::invalid_argument(
        "enumerate_contraction: graph has a zero-capacity cut; handle the "
        "degenerate case before enumeration");

  const Rational two_alpha = alpha * Rational{2};
  const std::int64_t ceil_2a = two_alpha.ceil().to_int64();
  const std::int64_t floor_2a = two_alpha.floor().to_int64();
  const int target =
      static_cast<int>(std::min<std::int64_t>(n, std::max<std::int64_t>(2, ceil_2a)));
  if (target > 26)
    throw std::invalid_argument(
        "enumerate_contraction: alpha too large; supervertex bipartitions "
        "would be infeasible to enumerate");

  const double delta =
      options.delta > 0 ? options.delta : 1.0 / static_cast<double>(n);
  std::int64_t reps = 1;
  if (n > target) {
    const double kd =
        std::pow(static_cast<double>(n), two_alpha.to_double()) *
        std::log(std::pow(static_cast<double>(n),
                          static_cast<double>(floor_2a)) /
                 delta);
    if (!std::isfinite(kd) || kd >= static_cast<double>(options.repetition_budget))
      reps = std::max<std::int64_t>(1, options.repetition_budget);
    else
      reps = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(kd)));
  }

  const ScaledCaps sc = build_scaled(capacities, threshold, strict);

  // Edges eligible for contraction: positive capacity only. A positive min
  // cut implies this subgraph is connected, so contraction always reaches
  // the target supervertex count.
  std::vector<std::size_t> contractible;
  std::vector<double> rate;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (capacities[i].sign() > 0) {
      contractible.push_back(i);
      rate.push_back(capacities[i].to_double());
    }
  }

  const std::size_t words = (std::size_t(n) + 63) / 64;
  auto word_bit = [](const SideKey& k, VertexId v) {
    return (k[std::size_t(v) >> 6] >> (std::size_t(v) & 63)) & 1u;
  };

  auto run_range = [&](std::int64_t rep_lo, std::int64_t rep_hi,
                       std::vector<FoundCut>& found) {
    std::unordered_set<SideKey, SideKeyHash> seen;
    std::vector<double> arrival(contractible.size());
    std::vector<std::size_t> order(contractible.size());
    Dsu dsu;
    std::vector<std::int32_t> comp_of(static_cast<std::size_t>(n));
    std::vector<SideKey> comp_words;

    for (std::int64_t rep = rep_lo; rep < rep_hi; ++rep) {
      SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(rep));
      for (std::size_t i = 0; i < contractible.size(); ++i)
        arrival[i] = rng.exponential(rate[i]);
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (arrival[a] != arrival[b]) return arrival[a] < arrival[b];
        return a < b;
      });

      dsu.reset(n);
      int comps = n;
      for (std::size_t oi = 0; oi < order.size() && comps > target; ++oi) {
        const Edge& e = edges[contractible[order[oi]]];
        if (dsu.unite(e.u, e.v)) --comps;
      }
      if (comps != target)
        throw std::logic_error(
            "enumerate_contraction: contraction failed to reach target");

      // Label components in first-seen vertex order.
      std::vector<std::int32_t> root_to_comp(static_cast<std::size_t>(n), -1);
      int k = 0;
      for (VertexId v = 0; v < n; ++v) {
        const std::int32_t r = dsu.find(v);
        if (root_to_comp[std::size_t(r)] < 0) root_to_comp[std::size_t(r)] = k++;
        comp_of[std::size_t(v)] = root_to_comp[std::size_t(r)];
      }
      comp_words.assign(std::size_t(k), SideKey(words, 0));
      for (VertexId v = 0; v < n; ++v)
        comp_words[std::size_t(comp_of[std::size_t(v)])][std::size_t(v) >> 6] |=
            std::uint64_t{1} << (std::size_t(v) & 63);

      const std::int32_t c0 = comp_of[0];
      std::vector<std::int32_t> others;
      others.reserve(std::size_t(k) - 1);
      for (std::int32_t c = 0; c < k; ++c)
        if (c != c0) others.push_back(c);

      const std::uint64_t mask_end = std::uint64_t{1} << others.size();
      SideKey key(words);
      for (std::uint64_t mask = 1; mask < mask_end; ++mask) {
        std::fill(key.begin(), key.end(), 0);
        for (std::size_t j = 0; j < others.size(); ++j) {
          if ((mask >> j) & 1u) {
            const SideKey& cw = comp_words[std::size_t(others[j])];
            for (std::size_t w = 0; w < words; ++w) key[w] |= cw[w];
          }
        }
        if (!seen.insert(key).second) continue;
        const bool pass = sc.passes(edges, [&](const Edge& e) {
          return word_bit(key, e.u) != word_bit(key, e.v);
        });
        if (!pass) continue;
        std::vector<VertexId> side;
        for (VertexId v = 1; v < n; ++v)
          if (word_bit(key, v)) side.push_back(v);
        found.push_back({key, std::move(side)});
      }
    }
  };

  const int threads = std::max(1, options.threads);
  std::vector<std::vector<FoundCut>> per_thread;
  if (threads == 1 || reps < 2 * threads) {
    per_thread.resize(1);
    run_range(0, reps, per_thread[0]);
  } else {
    per_thread.resize(std::size_t(threads));
    std::vector<std::thread> pool;
    const std::int64_t chunk = (reps + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::int64_t lo = std::min<std::int64_t>(t * chunk, reps);
      const std::int64_t hi = std::min<std::int64_t>(lo + chunk, reps);
      pool.emplace_back([&, lo, hi, t] { run_range(lo, hi, per_thread[std::size_t(t)]); });
    }
    for (auto& th : pool) th.join();
  }

  CutFamily family;
  family.threshold = threshold;
  family.strict = strict;
  family.method = CutFamily::Method::contraction;
  family.repetitions = reps;
  family.seed = seed;

  std::unordered_set<SideKey, SideKeyHash> global;
  for (const auto& bucket : per_thread) {
    for (const FoundCut& f : bucket) {
      if (!global.insert(f.key).second) continue;
      CutResult cut = cut_from_side(n, edges, capacities, f.side);
      const bool pass =
          strict ? cut.value < threshold : cut.value <= threshold;
      if (!pass)
        throw std::logic_error(
            "enumerate_contraction: fast-path verification disagreed with "
            "exact recomputation");
      family.cuts.push_back(std::move(cut));
    }
  }
  std::sort(family.cuts.begin(), family.cuts.end(), cut_less);
  return family;
}

}  // namespace interdict
