#ifndef HOMING_VERIFY_HPP
#define HOMING_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "homing/rules.hpp"

namespace homing {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // scope on pass, counterexample on failure
};

// The rules every quantified-over-all-shuffles check runs against: the
// five named shuffles plus the seeded shuffles 1..20.
std::vector<ShuffleRule> verification_rules();

// Suites: "homing" | "wilf" | "unsortable" | "max" | "equivalence" | "all".
// Every check inside a suite sweeps n = 2..max_n exhaustively
// (2 <= max_n <= 9). Throws UnknownKind for other suite names.
std::vector<CheckResult> run_suite(std::string_view suite, int max_n);

std::vector<std::string> suite_names();

}  // namespace homing

#endif  // HOMING_VERIFY_HPP
