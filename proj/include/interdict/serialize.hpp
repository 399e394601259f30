#ifndef INTERDICT_SERIALIZE_HPP
#define INTERDICT_SERIALIZE_HPP

#include <json.hpp>

#include "interdict/cut_enum.hpp"
#include "interdict/engine.hpp"
#include "interdict/oracle.hpp"

namespace interdict {

using json = nlohmann::json;

/// Rationals travel as exact {num, den} integer pairs, never floats.
/// Values beyond int64 are emitted as decimal strings.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json edge_set_to_json(const EdgeSet& s);
EdgeSet edge_set_from_json(const json& j);

json solution_to_json(const Solution& sol, std::int64_t timings_ms);
Solution solution_from_json(const json& j);

json certificate_to_json(const LambdaCertificate& cert);
json cut_family_to_json(const CutFamily& family);
json oracle_report_to_json(const OracleReport& report);

/// Deterministic dump: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace interdict

#endif  // INTERDICT_SERIALIZE_HPP
