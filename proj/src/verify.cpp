#include "homing/verify.hpp"

#include <cstdint>
#include <unordered_map>

#include "homing/analysis.hpp"
#include "homing/enumerate.hpp"

namespace homing {

namespace {

CheckResult passed(std::string name, int max_n, std::string extra = "") {
  return {std::move(name), true, "n=2.." + std::to_string(max_n) + std::move(extra)};
}

CheckResult failed(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

std::string describe(const ShuffleRule& rule, int n, const ValidationResult& v) {
  std::string s = "rule '" + rule.name() + "', n=" + std::to_string(n);
  if (v.counterexample) s += ", counterexample " + to_string(*v.counterexample);
  if (!v.detail.empty()) s += ": " + v.detail;
  return s;
}

std::uint64_t fibonacci(int i) {
  std::uint64_t a = 1, b = 1;  // f_1, f_2
  for (int t = 3; t <= i; ++t) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return i <= 2 ? 1 : b;
}

std::uint64_t equivalence_key(const Permutation& w) {
  const int k = w.front();
  std::uint64_t key = static_cast<std::uint64_t>(k);
  for (int i = k + 1; i <= w.size(); ++i) key = (key << 4) | static_cast<std::uint64_t>(w(i));
  return key;
}

// --- homing suite ---------------------------------------------------------

CheckResult check_homing_axioms(int max_n) {
  const char* name = "homing-axioms";
  const auto rules = verification_rules();
  for (int n = 2; n <= max_n; ++n)
    for (const ShuffleRule& rule : rules)
      if (const ValidationResult v = validate_homing(rule, n); !v)
        return failed(name, describe(rule, n, v));
  return passed(name, max_n, ", " + std::to_string(verification_rules().size()) + " rules");
}

CheckResult check_prefix_sets(int max_n) {
  const char* name = "prefix-set-identities";
  for (int n = 2; n <= max_n; ++n)
    for (const ShuffleRule& rule : verification_rules())
      for (const Permutation& w : all_permutations(n))
        if (!prefix_sets_check(rule, w))
          return failed(name, "rule '" + rule.name() + "', n=" + std::to_string(n) +
                                  ", counterexample " + to_string(w));
  return passed(name, max_n);
}

CheckResult check_fixed_point(int max_n) {
  const char* name = "fixed-point-iff-front-one";
  for (int n = 2; n <= max_n; ++n)
    for (const ShuffleRule& rule : verification_rules())
      for (const Permutation& w : all_permutations(n))
        if ((rule.apply(w) == w) != (w.front() == 1))
          return failed(name, "rule '" + rule.name() + "', counterexample " + to_string(w));
  return passed(name, max_n);
}

// --- wilf suite ------------------------------------------------------------

CheckResult check_wilf_bound(int max_n) {
  const char* name = "wilf-bound";
  for (int n = 2; n <= max_n; ++n)
    for (const Permutation& w : all_permutations(n))
      if (w.wilf_number_doubled() >= (std::uint64_t{1} << n))
        return failed(name, "counterexample " + to_string(w));
  return passed(name, max_n);
}

CheckResult check_wilf_increase(int max_n) {
  const char* name = "wilf-strict-increase";
  for (int n = 2; n <= max_n; ++n)
    for (const ShuffleRule& rule : verification_rules())
      if (const ValidationResult v = wilf_increase_check(rule, n); !v)
        return failed(name, describe(rule, n, v));
  return passed(name, max_n);
}

CheckResult check_termination_bound(int max_n) {
  const char* name = "termination-bound";
  for (int n = 2; n <= max_n; ++n) {
    const std::uint64_t cap = std::uint64_t{1} << (n - 1);
    for (const ShuffleRule& rule : verification_rules())
      for (const Permutation& w : all_permutations(n))
        if (static_cast<std::uint64_t>(steps_to_terminate(rule, w)) >= cap)
          return failed(name, "rule '" + rule.name() + "', deck " + to_string(w) +
                                  " needs 2^(n-1) steps or more");
  }
  return passed(name, max_n);
}

CheckResult check_transposition_tn(int max_n) {
  const char* name = "transposition-termination-n-1";
  const ShuffleRule rule = transposition_shuffle();
  for (int n = 2; n <= max_n; ++n)
    if (const auto report = termination_number(rule, n); report.tn != n - 1)
      return failed(name, "n=" + std::to_string(n) + ": tn=" + std::to_string(report.tn));
  return passed(name, max_n);
}

CheckResult check_mckinley_tn(int max_n) {
  const char* name = "mckinley-termination-2^(n-1)-1";
  const ShuffleRule rule = mckinley_shuffle();
  for (int n = 2; n <= max_n; ++n) {
    const int expected = static_cast<int>((std::uint64_t{1} << (n - 1)) - 1);
    if (const auto report = termination_number(rule, n); report.tn != expected)
      return failed(name, "n=" + std::to_string(n) + ": tn=" + std::to_string(report.tn) +
                              " instead of " + std::to_string(expected));
  }
  return passed(name, max_n);
}

CheckResult check_topswops_caps(int max_n) {
  const char* name = "topswops-termination-caps";
  const ShuffleRule rule = topswops_shuffle();
  for (int n = 2; n <= max_n; ++n) {
    const auto report = termination_number(rule, n);
    const std::uint64_t fib_cap = fibonacci(n + 1) - 1;
    const std::uint64_t hard_cap = (std::uint64_t{1} << (n - 1));
    if (static_cast<std::uint64_t>(report.tn) > fib_cap ||
        static_cast<std::uint64_t>(report.tn) >= hard_cap)
      return failed(name, "n=" + std::to_string(n) + ": tn=" + std::to_string(report.tn) +
                              " breaks the Fibonacci or 2^(n-1) cap");
  }
  return passed(name, max_n);
}

// --- unsortable suite -------------------------------------------------------

CheckResult check_transposition_sortables(int max_n) {
  const char* name = "transposition-sorts-single-cycles";
  const ShuffleRule rule = transposition_shuffle();
  for (int n = 2; n <= max_n; ++n)
    for (const Permutation& w : all_permutations(n))
      if (sorts(rule, w) != w.is_single_cycle_containing_one())
        return failed(name, "counterexample " + to_string(w));
  return passed(name, max_n);
}

CheckResult check_irreducible_counts(int max_n) {
  const char* name = "irreducible-count-recurrence";
  const SequenceTable table = count_irreducible_recurrence(max_n);
  for (int n = 1; n <= max_n; ++n)
    if (table.values[n - 1] != count_irreducible_bruteforce(n))
      return failed(name, "n=" + std::to_string(n) + ": recurrence " +
                              std::to_string(table.values[n - 1]) + " != brute force");
  return {name, true, "n=1.." + std::to_string(max_n)};
}

CheckResult check_unsortable_counts(int max_n) {
  const char* name = "unsortable-count-formula";
  const SequenceTable table = count_unsortable_formula(max_n);
  for (int n = 1; n <= max_n; ++n)
    if (table.values[n - 1] != count_unsortable_bruteforce(n))
      return failed(name, "n=" + std::to_string(n) + ": formula " +
                              std::to_string(table.values[n - 1]) + " != brute force");
  return {name, true, "n=1.." + std::to_string(max_n)};
}

CheckResult check_unsortable_closure(int max_n) {
  const char* name = "unsortable-closure";
  for (int n = 2; n <= max_n; ++n)
    for (const ShuffleRule& rule : verification_rules())
      if (const ValidationResult v = unsortable_closure_check(rule, n); !v)
        return failed(name, describe(rule, n, v));
  return passed(name, max_n);
}

CheckResult check_unsortable_never_sorted(int max_n) {
  const char* name = "unsortable-never-sorted";
  for (int n = 2; n <= max_n; ++n)
    for (const ShuffleRule& rule : verification_rules())
      for (const Permutation& w : all_permutations(n))
        if (w.is_unsortable() && sorts(rule, w))
          return failed(name, "rule '" + rule.name() + "' sorted " + to_string(w));
  return passed(name, max_n);
}

CheckResult check_mckinley_ratio(int max_n) {
  const char* name = "mckinley-ratio-below-e/n";
  for (int n = 2; n <= max_n; ++n) {
    try {
      (void)mckinley_ratio_probe(n);
    } catch (const Error& e) {
      return failed(name, e.what());
    }
  }
  return passed(name, max_n);
}

CheckResult check_tuple_sortables(int max_n) {
  const char* name = "topswops-tuple-sortables";
  for (int n = 2; n <= max_n; ++n) {
    std::vector<Permutation> tuples;
    try {
      tuples = topswops_tuple_sortables(n);
    } catch (const Error& e) {
      return failed(name, e.what());
    }
    if (tuples.size() != (std::uint64_t{1} << (n - 1)))
      return failed(name, "n=" + std::to_string(n) + ": " + std::to_string(tuples.size()) +
                              " products instead of 2^(n-1)");
  }
  if (max_n >= 5) {
    // A sortable deck beyond the increasing tuples: r_2 r_3 r_4 r_2 r_5 r_4.
    Permutation extra = Permutation::identity(5);
    for (const int m : {2, 3, 4, 2, 5, 4}) extra = extra * Permutation::reflection(5, m);
    if (!sorts(topswops_shuffle(), extra))
      return failed(name, "the non-tuple witness " + to_string(extra) + " is not sorted");
  }
  return passed(name, max_n);
}

// --- max suite ---------------------------------------------------------------

CheckResult check_max_front_card(int max_n) {
  const char* name = "max-front-card";
  for (int n = 2; n <= max_n; ++n)
    for (const ShuffleRule& rule : {max_shuffle(), max_shuffle_ascending()})
      if (const ValidationResult v = validate_max(rule, n); !v)
        return failed(name, describe(rule, n, v));
  return passed(name, max_n);
}

CheckResult check_max_sorts_complement(int max_n) {
  const char* name = "max-sorts-exactly-non-unsortables";
  for (int n = 2; n <= max_n; ++n)
    for (const ShuffleRule& rule : {max_shuffle(), max_shuffle_ascending()})
      for (const Permutation& w : all_permutations(n))
        if (sorts(rule, w) == w.is_unsortable())
          return failed(name, "rule '" + rule.name() + "', counterexample " + to_string(w));
  return passed(name, max_n);
}

CheckResult check_max_tn(int max_n) {
  const char* name = "max-termination-2n-3";
  for (int n = 2; n <= max_n; ++n) {
    for (const ShuffleRule& rule : {max_shuffle(), max_shuffle_ascending()}) {
      const auto report = termination_number(rule, n);
      if (report.tn != 2 * n - 3)
        return failed(name, "rule '" + rule.name() + "', n=" + std::to_string(n) +
                                ": tn=" + std::to_string(report.tn));
    }
    // (2,3,...,n,1) attains the maximum.
    std::vector<int> cyclic;
    for (int i = 2; i <= n; ++i) cyclic.push_back(i);
    cyclic.push_back(1);
    const Permutation witness = Permutation::from_one_line(cyclic);
    if (steps_to_terminate(max_shuffle(), witness) != 2 * n - 3)
      return failed(name, to_string(witness) + " is not a witness at n=" + std::to_string(n));
  }
  return passed(name, max_n);
}

CheckResult check_max_variants_equal_tn(int max_n) {
  const char* name = "max-variants-share-termination-number";
  for (int n = 2; n <= max_n; ++n)
    if (termination_number(max_shuffle(), n).tn != termination_number(max_shuffle_ascending(), n).tn)
      return failed(name, "n=" + std::to_string(n));
  return passed(name, max_n);
}

CheckResult check_front_card_match(int max_n) {
  const char* name = "max-front-card-sequences-match";
  const ShuffleRule a = max_shuffle();
  const ShuffleRule b = max_shuffle_ascending();
  for (int n = 2; n <= max_n; ++n)
    for (const Permutation& w : all_permutations(n))
      if (front_card_sequence(a, w) != front_card_sequence(b, w))
        return failed(name, "counterexample " + to_string(w));
  return passed(name, max_n);
}

CheckResult check_max_descent(int max_n) {
  const char* name = "max-descent";
  for (int n = 2; n <= max_n; ++n)
    if (const ValidationResult v = max_descent_check(n); !v)
      return failed(name, "n=" + std::to_string(n) +
                              (v.counterexample ? ", counterexample " + to_string(*v.counterexample)
                                                : std::string()) +
                              ": " + v.detail);
  return passed(name, max_n);
}

// --- equivalence suite ---------------------------------------------------------

CheckResult check_class_count(int max_n) {
  const char* name = "equivalence-class-count";
  for (int n = 1; n <= max_n; ++n) {
    const std::int64_t formula = class_count_formula(n);
    if (class_count_bruteforce(n) != formula)
      return failed(name, "n=" + std::to_string(n) + ": partition and formula disagree");
    // formula <= (n-1)! e, with e bounded above by 27182818285 / 10^10.
    const unsigned __int128 lhs = static_cast<unsigned __int128>(formula) * 10000000000ULL;
    const unsigned __int128 rhs =
        static_cast<unsigned __int128>(factorial(n - 1)) * 27182818285ULL;
    if (lhs >= rhs)
      return failed(name, "n=" + std::to_string(n) + ": class count breaks the (n-1)! e bound");
  }
  return {name, true, "n=1.." + std::to_string(max_n)};
}

CheckResult check_class_sizes(int max_n) {
  const char* name = "equivalence-class-sizes";
  for (int n = 2; n <= max_n; ++n) {
    std::unordered_map<std::uint64_t, std::pair<int, std::uint64_t>> classes;
    for (const Permutation& w : all_permutations(n)) {
      auto& entry = classes[equivalence_key(w)];
      entry.first = w.front();
      ++entry.second;
    }
    for (const auto& [key, entry] : classes)
      if (entry.second != factorial(entry.first - 1))
        return failed(name, "n=" + std::to_string(n) + ": a class with front card " +
                                std::to_string(entry.first) + " has size " +
                                std::to_string(entry.second));
  }
  return passed(name, max_n);
}

CheckResult check_equivalence_preserved(int max_n) {
  const char* name = "equivalence-preserved-by-max-shuffles";
  const ShuffleRule a = max_shuffle();
  const ShuffleRule b = max_shuffle_ascending();
  for (int n = 2; n <= max_n; ++n) {
    std::unordered_map<std::uint64_t, std::uint64_t> image_key;
    for (const Permutation& w : all_permutations(n)) {
      const std::uint64_t key = equivalence_key(w);
      for (const ShuffleRule& rule : {a, b}) {
        const std::uint64_t img = equivalence_key(rule.apply(w));
        const auto [it, inserted] = image_key.emplace(key, img);
        if (!inserted && it->second != img)
          return failed(name, "rule '" + rule.name() + "', counterexample " + to_string(w));
      }
    }
  }
  return passed(name, max_n);
}

using CheckFn = CheckResult (*)(int);

const std::vector<std::pair<std::string, std::vector<CheckFn>>>& suites() {
  static const std::vector<std::pair<std::string, std::vector<CheckFn>>> table = {
      {"homing", {check_homing_axioms, check_prefix_sets, check_fixed_point}},
      {"wilf",
       {check_wilf_bound, check_wilf_increase, check_termination_bound, check_transposition_tn,
        check_mckinley_tn, check_topswops_caps}},
      {"unsortable",
       {check_transposition_sortables, check_irreducible_counts, check_unsortable_counts,
        check_unsortable_closure, check_unsortable_never_sorted, check_mckinley_ratio,
        check_tuple_sortables}},
      {"max",
       {check_max_front_card, check_max_sorts_complement, check_max_tn,
        check_max_variants_equal_tn, check_front_card_match, check_max_descent}},
      {"equivalence", {check_class_count, check_class_sizes, check_equivalence_preserved}},
  };
  return table;
}

}  // namespace

std::vector<ShuffleRule> verification_rules() {
  std::vector<ShuffleRule> rules = builtin_shuffles();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) rules.push_back(seeded_shuffle(seed));
  return rules;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, checks] : suites()) names.push_back(name);
  names.push_back("all");
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, int max_n) {
  if (max_n < 2 || max_n > kValidationCap)
    throw NExceedsExhaustiveCap("verification needs 2 <= max-n <= " +
                                std::to_string(kValidationCap) + ", got " +
                                std::to_string(max_n));
  std::vector<CheckResult> results;
  bool found = false;
  for (const auto& [name, checks] : suites()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    for (const CheckFn check : checks) results.push_back(check(max_n));
  }
  if (!found) throw UnknownKind("unknown suite '" + std::string(suite) + "'");
  return results;
}

}  // namespace homing
