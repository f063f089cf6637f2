#ifndef HOMING_ANALYSIS_HPP
#define HOMING_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homing/perm.hpp"
#include "homing/rules.hpp"

namespace homing {

// Caps for the exhaustive operations below.
inline constexpr int kCountCap = 11;     // per-permutation O(n) kernels
inline constexpr int kMaterializeCap = 8;
inline constexpr int kFormulaCap = Permutation::kMaxN;

// One full iteration record: states f^0(w)..f^m(w) where m is the first
// step whose front card is 1. The state is constant from there on, so the
// trace stops at m.
struct Trace {
  std::string rule_name;
  Permutation start;
  std::vector<Permutation> states;
  std::vector<int> front_cards;
  int steps = 0;
  bool sorted = false;
};

// Exhaustive termination sweep over S_n for one rule.
struct TerminationReport {
  std::string rule_name;
  int n = 0;
  // Maximum of steps-to-terminate over all of S_n.
  int tn = 0;
  // Lexicographically least permutation attaining tn.
  Permutation least_witness;
  std::uint64_t witness_count = 0;
  // steps -> number of permutations; counts sum to n!.
  std::map<int, std::uint64_t> histogram;
};

// n -> integer, keyed by consecutive n starting at 1 (values[i] is n = i+1).
struct SequenceTable {
  std::string label;
  std::string method;  // "formula" | "brute_force"
  std::vector<std::int64_t> values;
};

// Exact fraction, not reduced.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

Trace iterate_trace(const ShuffleRule& rule, const Permutation& start);
// Least m with f^m(w)(1) = 1; Trace::steps without storing states.
int steps_to_terminate(const ShuffleRule& rule, const Permutation& start);
// (f^0(w)(1), ..., f^m(w)(1)), ending at 1.
std::vector<int> front_card_sequence(const ShuffleRule& rule, const Permutation& start);
// True iff the terminal state is the identity.
bool sorts(const ShuffleRule& rule, const Permutation& start);

TerminationReport termination_number(const ShuffleRule& rule, int n, int workers = 1);

// |I_n| = n! - sum_{i<n} |I_i| (n-i)!, exact, n_max <= 20.
SequenceTable count_irreducible_recurrence(int n_max);
std::int64_t count_irreducible_bruteforce(int n, int workers = 1);
// |U_n| = n! - sum_{k<=n} |I_k|, exact, n_max <= 20.
SequenceTable count_unsortable_formula(int n_max);
std::int64_t count_unsortable_bruteforce(int n, int workers = 1);

struct SortableCensus {
  std::int64_t count = 0;
  std::optional<std::vector<Permutation>> members;  // lexicographic order
};

// Counts (n <= 11) or materializes (n <= 8) the decks the rule sorts.
SortableCensus sortable_census(const ShuffleRule& rule, int n, bool materialize = false,
                               int workers = 1);

// sortable count / n!, with the exact-rational assertion that the ratio
// stays below e/n.
Ratio mckinley_ratio_probe(int n, int workers = 1);

// The 2^(n-1) products r_{k_1}...r_{k_m} over increasing tuples
// 1 < k_1 < ... < k_m <= n; all distinct and all sorted by topswops.
std::vector<Permutation> topswops_tuple_sortables(int n);

// Doubled Wilf number strictly increases on every non-terminated deck.
ValidationResult wilf_increase_check(const ShuffleRule& rule, int n);

// w ~ w': equal front cards and equal entries above the front card.
bool are_equivalent(const Permutation& a, const Permutation& b);
std::int64_t class_count_bruteforce(int n);
// sum_{k=1}^{n} (n-1)!/(k-1)!, exact.
std::int64_t class_count_formula(int n);

// Every unsortable deck stays unsortable under the rule, and its
// irreducibility index never grows.
ValidationResult unsortable_closure_check(const ShuffleRule& rule, int n);

// Descent facts shared by both max-shuffle variants: an unchanged front
// card means the deck was already home; a non-increasing front card
// forces termination within k-1 more steps (hence within n-1); the
// irreducibility index is preserved above the front card and drops by
// exactly one when it equals a front card k >= 2.
ValidationResult max_descent_check(int n);

}  // namespace homing

#endif  // HOMING_ANALYSIS_HPP
