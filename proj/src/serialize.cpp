#include "interdict/serialize.hpp"

namespace interdict {

namespace {

json bigint_to_json(const BigInt& v) {
  if (v.fits_int64()) return v.to_int64();
  return v.to_string();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_string()) return BigInt::from_string(j.get<std::string>());
  return BigInt{j.get<std::int64_t>()};
}

EnumMode enum_mode_from_string(const std::string& s) {
  if (s == "auto") return EnumMode::automatic;
  if (s == "exhaustive") return EnumMode::exhaustive;
  if (s == "contraction") return EnumMode::contraction;
  throw std::invalid_argument("unknown enumeration mode '" + s + "'");
}

}  // namespace

json rational_to_json(const Rational& r) {
  return json{{"num", bigint_to_json(r.num())},
              {"den", bigint_to_json(r.den())}};
}

Rational rational_from_json(const json& j) {
  return Rational{bigint_from_json(j.at("num")), bigint_from_json(j.at("den"))};
}

json edge_set_to_json(const EdgeSet& s) {
  json arr = json::array();
  for (EdgeId id : s) arr.push_back(id);
  return arr;
}

EdgeSet edge_set_from_json(const json& j) {
  std::vector<EdgeId> ids;
  for (const auto& v : j) ids.push_back(v.get<EdgeId>());
  return EdgeSet{std::move(ids)};
}

json solution_to_json(const Solution& sol, std::int64_t timings_ms) {
  return json{{"value", sol.value},
              {"S", edge_set_to_json(sol.S)},
              {"R", edge_set_to_json(sol.R)},
              {"lambda_star", rational_to_json(sol.lambda_star)},
              {"L_star", rational_to_json(sol.L_star)},
              {"Lambda", rational_to_json(sol.Lambda)},
              {"candidates", sol.candidates},
              {"degenerate", sol.degenerate},
              {"enumeration", to_string(sol.enumeration_used)},
              {"knapsack", to_string(sol.knapsack_used)},
              {"seed", sol.seed},
              {"timings_ms", timings_ms}};
}

Solution solution_from_json(const json& j) {
  Solution sol;
  sol.value = j.at("value").get<std::int64_t>();
  sol.S = edge_set_from_json(j.at("S"));
  sol.R = edge_set_from_json(j.at("R"));
  sol.lambda_star = rational_from_json(j.at("lambda_star"));
  sol.L_star = rational_from_json(j.at("L_star"));
  sol.Lambda = rational_from_json(j.at("Lambda"));
  sol.candidates = j.at("candidates").get<std::int64_t>();
  sol.degenerate = j.at("degenerate").get<bool>();
  sol.enumeration_used = enum_mode_from_string(j.at("enumeration"));
  sol.knapsack_used = j.at("knapsack").get<std::string>() == "exact"
                          ? KnapsackMode::exact
                          : KnapsackMode::fptas;
  sol.seed = j.at("seed").get<std::uint64_t>();
  return sol;
}

json certificate_to_json(const LambdaCertificate& cert) {
  auto line = [](const ActiveLine& l) {
    return json{{"intercept", rational_to_json(l.intercept)},
                {"slope", rational_to_json(l.slope)},
                {"S", edge_set_to_json(l.witness_S)},
                {"R", edge_set_to_json(l.witness_R)}};
  };
  return json{{"lambda_star", rational_to_json(cert.lambda_star)},
              {"L_star", rational_to_json(cert.L_star)},
              {"Lambda", rational_to_json(cert.Lambda)},
              {"line_lo", line(cert.line_lo)},
              {"line_hi", line(cert.line_hi)}};
}

json cut_family_to_json(const CutFamily& family) {
  json cuts = json::array();
  for (const CutResult& cut : family.cuts) {
    cuts.push_back(json{{"value", rational_to_json(cut.value)},
                        {"side", cut.side},
                        {"edges", edge_set_to_json(cut.cut_edges)}});
  }
  json j{{"threshold", rational_to_json(family.threshold)},
         {"strict", family.strict},
         {"method", family.method == CutFamily::Method::exhaustive
                        ? "exhaustive"
                        : "contraction"},
         {"count", family.cuts.size()},
         {"cuts", std::move(cuts)}};
  if (family.method == CutFamily::Method::contraction) {
    j["repetitions"] = family.repetitions;
    j["seed"] = family.seed;
  }
  return j;
}

json oracle_report_to_json(const OracleReport& report) {
  json table = json::array();
  for (const auto& entry : report.table) {
    table.push_back(json{{"cut", edge_set_to_json(entry.cut)},
                         {"side", entry.side},
                         {"g_b", entry.g_b},
                         {"removed", edge_set_to_json(entry.removed)}});
  }
  json j{{"value", report.value},
         {"S", edge_set_to_json(report.best_S)},
         {"R", edge_set_to_json(report.best_R)},
         {"table", std::move(table)}};
  if (!report.lambda_grid.empty()) {
    json grid = json::array();
    for (const auto& [lambda, value] : report.lambda_grid)
      grid.push_back(json{{"lambda", rational_to_json(lambda)},
                          {"phi", rational_to_json(value)}});
    j["lambda_grid"] = std::move(grid);
  }
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace interdict
