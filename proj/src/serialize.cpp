#include "homing/serialize.hpp"

namespace homing {

using nlohmann::json;

json to_json(const Permutation& w) {
  json a = json::array();
  for (const std::uint8_t v : w.one_line()) a.push_back(static_cast<int>(v));
  return a;
}

json to_json(const Trace& trace) {
  json states = json::array();
  for (const Permutation& s : trace.states) states.push_back(to_json(s));
  return json{{"rule", trace.rule_name},
              {"start", to_json(trace.start)},
              {"states", std::move(states)},
              {"front_cards", trace.front_cards},
              {"steps", trace.steps},
              {"sorted", trace.sorted}};
}

json to_json(const TerminationReport& report) {
  json histogram = json::object();
  for (const auto& [steps, count] : report.histogram)
    histogram[std::to_string(steps)] = count;
  return json{{"rule", report.rule_name},
              {"n", report.n},
              {"tn", report.tn},
              {"witness", to_json(report.least_witness)},
              {"witness_count", report.witness_count},
              {"histogram", std::move(histogram)}};
}

json to_json(const SequenceTable& table) {
  json entries = json::array();
  for (std::size_t i = 0; i < table.values.size(); ++i)
    entries.push_back(json{{"n", i + 1}, {"value", table.values[i]}});
  return json{{"label", table.label}, {"method", table.method}, {"entries", std::move(entries)}};
}

std::string to_csv(const SequenceTable& table) {
  std::string out = "n,value,method\n";
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += std::to_string(table.values[i]);
    out += ',';
    out += table.method;
    out += '\n';
  }
  return out;
}

}  // namespace homing
