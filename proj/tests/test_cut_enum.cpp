#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "interdict/cut_enum.hpp"
#include "test_util.hpp"

using namespace interdict;

namespace {

std::vector<Rational> unit_caps(std::size_t m) {
  return std::vector<Rational>(m, Rational{1});
}

std::set<std::vector<VertexId>> sides_of(const CutFamily& family) {
  std::set<std::vector<VertexId>> out;
  for (const CutResult& cut : family.cuts) out.insert(cut.side);
  return out;
}

InterdictionInstance complete_graph(int n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      edges.push_back({static_cast<EdgeId>(edges.size()), u, v, 1, 1});
  return InterdictionInstance(n, std::move(edges), 0);
}

}  // namespace

TEST_CASE("exhaustive enumeration on the golden triangle") {
  const auto inst = test::t1();
  const std::vector<Rational> caps = {Rational{4}, Rational{2}, Rational{5}};
  const CutFamily family =
      enumerate_exhaustive(3, inst.edges(), caps, Rational{12}, true);
  REQUIRE(family.cuts.size() == 3);
  CHECK(family.cuts[0].value == Rational{6});
  CHECK(family.cuts[1].value == Rational{7});
  CHECK(family.cuts[2].value == Rational{9});
  CHECK(family.method == CutFamily::Method::exhaustive);
}

TEST_CASE("threshold edge cases") {
  const auto inst = test::unit_triangle(0);
  const auto caps = unit_caps(3);
  CHECK(enumerate_exhaustive(3, inst.edges(), caps, Rational{0}, true)
            .cuts.empty());
  CHECK(enumerate_exhaustive(3, inst.edges(), caps, Rational{2}, true)
            .cuts.empty());
  CHECK(enumerate_exhaustive(3, inst.edges(), caps, Rational{2}, false)
            .cuts.size() == 3);
}

TEST_CASE("exhaustive limit error points at contraction") {
  const auto inst = test::unit_triangle(0);
  CHECK_THROWS_WITH_AS(
      enumerate_exhaustive(3, inst.edges(), unit_caps(3), Rational{2}, true,
                           2),
      doctest::Contains("contraction"), std::invalid_argument);
}

TEST_CASE("contraction agrees with exhaustive on the golden triangle") {
  const auto inst = test::t1();
  const std::vector<Rational> caps = {Rational{4}, Rational{2}, Rational{5}};
  const CutFamily ex =
      enumerate_exhaustive(3, inst.edges(), caps, Rational{12}, true);
  const CutFamily ct = enumerate_contraction(
      3, inst.edges(), caps, Rational{12}, true, Rational{2}, 7);
  CHECK(sides_of(ex) == sides_of(ct));
  CHECK(ct.method == CutFamily::Method::contraction);
}

TEST_CASE("nothing lies strictly below the min cut of K5") {
  const auto inst = complete_graph(5);
  const auto caps = unit_caps(std::size_t(inst.edge_count()));
  const CutFamily family = enumerate_contraction(
      5, inst.edges(), caps, Rational{4}, true, Rational{1}, 3);
  CHECK(family.cuts.empty());
}

TEST_CASE("contraction requires a positive min cut") {
  std::vector<Edge> edges = {{0, 0, 1, 1, 1}, {1, 2, 3, 1, 1}};
  CHECK_THROWS_AS(
      enumerate_contraction(4, edges, unit_caps(2), Rational{5}, true,
                            Rational{2}, 1),
      std::invalid_argument);
}

TEST_CASE("every reported cut passes the threshold test exactly") {
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = test::random_instance(trial, 9);
    std::vector<Rational> caps;
    for (const Edge& e : inst.edges())
      caps.emplace_back(e.weight, e.cost);  // rational capacities
    const Rational threshold{17, 3};
    const CutFamily family = enumerate_exhaustive(
        inst.vertex_count(), inst.edges(), caps, threshold, true);
    for (const CutResult& cut : family.cuts) {
      CHECK(set_weight(cut.cut_edges, caps) == cut.value);
      CHECK(cut.value < threshold);
    }
  }
}

TEST_CASE("contraction reproduces the exhaustive family on random graphs") {
  int matches = 0;
  const int trials = 25;
  for (int trial = 0; trial < trials; ++trial) {
    const auto inst = test::random_instance(trial + 1000, 9);
    std::vector<Rational> caps;
    for (const Edge& e : inst.edges())
      caps.emplace_back(1 + e.weight);  // keep the min cut positive
    const Rational mc = test::brute_min_cut_value(inst.vertex_count(),
                                                  inst.edges(), caps);
    const Rational threshold = Rational{2} * mc;
    const CutFamily ex = enumerate_exhaustive(
        inst.vertex_count(), inst.edges(), caps, threshold, true);
    const CutFamily ct = enumerate_contraction(
        inst.vertex_count(), inst.edges(), caps, threshold, true, Rational{2},
        std::uint64_t(trial));
    // Soundness always; completeness with high probability.
    for (const CutResult& cut : ct.cuts) CHECK(cut.value < threshold);
    const auto ex_sides = sides_of(ex);
    const auto ct_sides = sides_of(ct);
    for (const auto& side : ct_sides) CHECK(ex_sides.count(side) == 1);
    if (ex_sides == ct_sides) ++matches;
  }
  CHECK(matches >= trials - 1);
}

TEST_CASE("family size with alpha 2 stays within n^3 on small graphs") {
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = test::random_instance(trial + 50, 8);
    std::vector<Rational> caps;
    for (const Edge& e : inst.edges()) caps.emplace_back(1 + e.weight);
    const Rational mc = test::brute_min_cut_value(inst.vertex_count(),
                                                  inst.edges(), caps);
    const CutFamily family = enumerate_exhaustive(
        inst.vertex_count(), inst.edges(), caps, Rational{2} * mc, true);
    const std::size_t n = std::size_t(inst.vertex_count());
    CHECK(family.cuts.size() <= n * n * n);
  }
}

TEST_CASE("contraction is deterministic per seed and thread count") {
  const auto inst = test::random_instance(31, 9);
  std::vector<Rational> caps;
  for (const Edge& e : inst.edges()) caps.emplace_back(1 + e.weight);
  const Rational mc =
      test::brute_min_cut_value(inst.vertex_count(), inst.edges(), caps);
  ContractionOptions one;
  one.threads = 1;
  ContractionOptions four;
  four.threads = 4;
  const CutFamily a =
      enumerate_contraction(inst.vertex_count(), inst.edges(), caps,
                            Rational{2} * mc, true, Rational{2}, 99, one);
  const CutFamily b =
      enumerate_contraction(inst.vertex_count(), inst.edges(), caps,
                            Rational{2} * mc, true, Rational{2}, 99, four);
  REQUIRE(a.cuts.size() == b.cuts.size());
  for (std::size_t i = 0; i < a.cuts.size(); ++i) {
    CHECK(a.cuts[i].side == b.cuts[i].side);
    CHECK(a.cuts[i].value == b.cuts[i].value);
    CHECK(a.cuts[i].cut_edges == b.cuts[i].cut_edges);
  }
}
