#ifndef HOMING_CLI_HPP
#define HOMING_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace homing {

// Exit codes: 0 ok, 1 verification failure, 2 parse/usage error,
// 3 exhaustive cap exceeded, 4 formula/brute-force mismatch, 5 I/O error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience for in-process tests; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homing

#endif  // HOMING_CLI_HPP
