// JSON wire formats for automata and witness reports. Field order is fixed
// so that output diffs cleanly.

#include <json.hpp>

#include "amzeta/automata.hpp"
#include "amzeta/errors.hpp"
#include "amzeta/witness.hpp"

namespace amzeta {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

}  // namespace

std::string dfao_to_json(const Dfao& a) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["alphabet"] = a.base();
  j["states"] = a.states();
  j["initial"] = a.initial();
  Json rows = Json::array();
  for (std::size_t s = 0; s < a.states(); ++s) {
    Json row = Json::array();
    for (unsigned d = 0; d < a.base(); ++d) row.push_back(a.next(static_cast<Dfao::State>(s), d));
    rows.push_back(std::move(row));
  }
  j["transitions"] = std::move(rows);
  j["outputs"] = a.outputs();
  j["defined_at_zero"] = a.defined_at_zero();
  return j.dump();
}

Dfao dfao_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
    const unsigned base = j.at("alphabet").get<unsigned>();
    const std::size_t states = j.at("states").get<std::size_t>();
    std::vector<Dfao::State> table;
    const Json& rows = j.at("transitions");
    if (!rows.is_array() || rows.size() != states) {
      throw InvalidArgument("DFAO JSON: transitions must have one row per state");
    }
    for (const Json& row : rows) {
      if (!row.is_array() || row.size() != base) {
        throw InvalidArgument("DFAO JSON: each transition row needs one entry per digit");
      }
      for (const Json& t : row) table.push_back(t.get<Dfao::State>());
    }
    auto outputs = j.at("outputs").get<std::vector<Symbol>>();
    if (outputs.size() != states) throw InvalidArgument("DFAO JSON: one output per state");
    const bool at_zero = j.value("defined_at_zero", true);
    return Dfao(base, std::move(table), j.at("initial").get<Dfao::State>(), std::move(outputs),
                at_zero);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("DFAO JSON: ") + e.what());
  }
}

std::string witness_to_json(const WitnessReport& report) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["scenario"] = report.scenario;
  Json params = Json::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  j["params"] = std::move(params);
  j["range"] = report.range;
  Json ids = Json::array();
  for (const auto& id : report.identities) {
    ids.push_back({{"name", id.name}, {"verified_count", id.verified}, {"checked_count", id.checked}});
  }
  j["identities"] = std::move(ids);
  Json ces = Json::array();
  for (const auto& ce : report.counterexamples) {
    ces.push_back({{"k", ce.k.get_str()},
                   {"n", ce.n.get_str()},
                   {"a", ce.a.get_str()},
                   {"v_left", ce.v_left},
                   {"v_right", ce.v_right}});
  }
  j["counterexamples"] = std::move(ces);
  return j.dump();
}

}  // namespace amzeta
