#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "interdict/serialize.hpp"
#include "test_util.hpp"

using namespace interdict;
using test::t1;

TEST_CASE("rationals travel as exact num/den pairs") {
  const json j = rational_to_json(Rational{-6, 4});
  CHECK(j.at("num").get<std::int64_t>() == -3);
  CHECK(j.at("den").get<std::int64_t>() == 2);
  CHECK(rational_from_json(j) == Rational{-3, 2});

  const Rational huge{BigInt::from_string("123456789012345678901234567890"),
                      BigInt{7}};
  const json jh = rational_to_json(huge);
  CHECK(jh.at("num").is_string());
  CHECK(rational_from_json(jh) == huge);
}

TEST_CASE("solution json round trip preserves the witness invariants") {
  const auto inst = t1();
  const Solution sol = solve(inst);
  const json j = solution_to_json(sol, 12);
  CHECK(j.at("value").get<std::int64_t>() == 3);
  CHECK(j.at("candidates").get<std::int64_t>() == 3);
  CHECK(j.at("degenerate").get<bool>() == false);
  CHECK(j.at("lambda_star").at("num").get<std::int64_t>() == 2);
  CHECK(j.at("lambda_star").at("den").get<std::int64_t>() == 1);
  CHECK(j.at("timings_ms").get<std::int64_t>() == 12);

  const Solution back = solution_from_json(j);
  CHECK(back.value == sol.value);
  CHECK(back.S == sol.S);
  CHECK(back.R == sol.R);
  CHECK(back.lambda_star == sol.lambda_star);
  CHECK(back.L_star == sol.L_star);
  CHECK(back.Lambda == sol.Lambda);
  CHECK(back.degenerate == sol.degenerate);

  for (EdgeId id : back.R) CHECK(back.S.contains(id));
  CHECK(set_cost(inst, back.R) <= inst.budget());
  std::int64_t residual = 0;
  for (EdgeId id : back.S)
    if (!back.R.contains(id)) residual += inst.edge(id).weight;
  CHECK(residual == back.value);
}

TEST_CASE("dump is deterministic and ends with a newline") {
  const Solution sol = solve(t1());
  const std::string a = dump(solution_to_json(sol, 0));
  const std::string b = dump(solution_to_json(solve(t1()), 0));
  CHECK(a == b);
  CHECK(a.back() == '\n');
}

TEST_CASE("certificate and family serialization") {
  const auto inst = t1();
  const GraphCutFamily fam(inst);
  const LambdaCertificate cert = find_lambda_star(inst, fam);
  const json jc = certificate_to_json(cert);
  CHECK(jc.at("lambda_star").at("num").get<std::int64_t>() == 2);
  CHECK(jc.at("line_lo").at("slope").at("num").get<std::int64_t>() == 1);
  CHECK(jc.at("line_hi").at("slope").at("num").get<std::int64_t>() == -1);

  const auto w_star = truncate_weights(inst, cert.lambda_star);
  const CutFamily family = enumerate_exhaustive(
      inst.vertex_count(), inst.edges(), w_star, Rational{2} * cert.L_star,
      true);
  const json jf = cut_family_to_json(family);
  CHECK(jf.at("count").get<std::size_t>() == 3);
  CHECK(jf.at("method").get<std::string>() == "exhaustive");
  CHECK(jf.at("strict").get<bool>() == true);
}

TEST_CASE("oracle report serialization") {
  const json j = oracle_report_to_json(brute_solve(t1()));
  CHECK(j.at("value").get<std::int64_t>() == 3);
  CHECK(j.at("table").size() == 3);
}
