#ifndef HOMING_SERIALIZE_HPP
#define HOMING_SERIALIZE_HPP

#include <string>

#include "json.hpp"

#include "homing/analysis.hpp"

namespace homing {

nlohmann::json to_json(const Permutation& w);
nlohmann::json to_json(const Trace& trace);
// {"rule", "n", "tn", "witness", "witness_count", "histogram"}.
nlohmann::json to_json(const TerminationReport& report);
nlohmann::json to_json(const SequenceTable& table);

// "n,value,method\n" header plus one row per n, ascending.
std::string to_csv(const SequenceTable& table);

}  // namespace homing

#endif  // HOMING_SERIALIZE_HPP
