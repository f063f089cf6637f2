#include "homing/analysis.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "homing/enumerate.hpp"

namespace homing {

namespace {

std::uint64_t step_cap(int n) { return std::uint64_t{1} << (n - 1); }

void check_count_cap(int n) {
  if (n < 1) throw IndexOutOfRange("deck size must be at least 1, got " + std::to_string(n));
  if (n > kCountCap)
    throw NExceedsExhaustiveCap("n = " + std::to_string(n) + " exceeds the brute-force cap of " +
                                std::to_string(kCountCap));
}

void check_validation_cap(int n) {
  if (n < 1) throw IndexOutOfRange("deck size must be at least 1, got " + std::to_string(n));
  if (n > kValidationCap)
    throw NExceedsExhaustiveCap("n = " + std::to_string(n) +
                                " exceeds the exhaustive-validation cap of " +
                                std::to_string(kValidationCap));
}

void check_formula_cap(int n) {
  if (n < 1) throw IndexOutOfRange("deck size must be at least 1, got " + std::to_string(n));
  if (n > kFormulaCap)
    throw NExceedsExhaustiveCap("n = " + std::to_string(n) + " exceeds the formula cap of " +
                                std::to_string(kFormulaCap));
}

[[noreturn]] void throw_cap_exceeded(const ShuffleRule& rule, const Permutation& start) {
  throw CapExceeded("rule '" + rule.name() + "' did not terminate on " + to_string(start) +
                    " within 2^(n-1) iterations; it violates the homing contract");
}

// Key of the equivalence class of w: the front card plus everything above
// it. Two decks are equivalent iff their keys agree. Needs n <= 9 so each
// entry fits a nibble.
std::uint64_t class_key(const Permutation& w) {
  const int k = w.front();
  std::uint64_t key = static_cast<std::uint64_t>(k);
  for (int i = k + 1; i <= w.size(); ++i) key = (key << 4) | static_cast<std::uint64_t>(w(i));
  return key;
}

}  // namespace

Trace iterate_trace(const ShuffleRule& rule, const Permutation& start) {
  Trace t;
  t.rule_name = rule.name();
  t.start = start;
  t.states.push_back(start);
  t.front_cards.push_back(start.front());
  const std::uint64_t cap = step_cap(start.size());
  Permutation cur = start;
  std::uint64_t steps = 0;
  while (cur.front() != 1) {
    if (steps + 1 >= cap) throw_cap_exceeded(rule, start);
    cur = rule.apply(cur);
    ++steps;
    t.states.push_back(cur);
    t.front_cards.push_back(cur.front());
  }
  t.steps = static_cast<int>(steps);
  t.sorted = cur.is_identity();
  return t;
}

int steps_to_terminate(const ShuffleRule& rule, const Permutation& start) {
  const std::uint64_t cap = step_cap(start.size());
  Permutation cur = start;
  std::uint64_t steps = 0;
  while (cur.front() != 1) {
    if (steps + 1 >= cap) throw_cap_exceeded(rule, start);
    cur = rule.apply(cur);
    ++steps;
  }
  return static_cast<int>(steps);
}

std::vector<int> front_card_sequence(const ShuffleRule& rule, const Permutation& start) {
  const std::uint64_t cap = step_cap(start.size());
  std::vector<int> fronts{start.front()};
  Permutation cur = start;
  std::uint64_t steps = 0;
  while (cur.front() != 1) {
    if (steps + 1 >= cap) throw_cap_exceeded(rule, start);
    cur = rule.apply(cur);
    ++steps;
    fronts.push_back(cur.front());
  }
  return fronts;
}

bool sorts(const ShuffleRule& rule, const Permutation& start) {
  const std::uint64_t cap = step_cap(start.size());
  Permutation cur = start;
  std::uint64_t steps = 0;
  while (cur.front() != 1) {
    if (steps + 1 >= cap) throw_cap_exceeded(rule, start);
    cur = rule.apply(cur);
    ++steps;
  }
  return cur.is_identity();
}

TerminationReport termination_number(const ShuffleRule& rule, int n, int workers) {
  struct Accum {
    int tn = -1;
    std::uint64_t least_rank = 0;
    std::map<int, std::uint64_t> histogram;
  };
  const Accum result = parallel_fold_ranked(
      n, Accum{},
      [&rule](Accum& a, std::uint64_t rank, const Permutation& w) {
        const int s = steps_to_terminate(rule, w);
        ++a.histogram[s];
        if (s > a.tn) {
          a.tn = s;
          a.least_rank = rank;
        }
      },
      [](Accum a, Accum b) {
        for (const auto& [steps, count] : b.histogram) a.histogram[steps] += count;
        if (b.tn > a.tn || (b.tn == a.tn && b.least_rank < a.least_rank)) {
          a.tn = b.tn;
          a.least_rank = b.least_rank;
        }
        return a;
      },
      workers);

  TerminationReport report;
  report.rule_name = rule.name();
  report.n = n;
  report.tn = result.tn;
  report.least_witness = unrank(n, result.least_rank);
  report.witness_count = result.histogram.at(result.tn);
  report.histogram = result.histogram;
  return report;
}

SequenceTable count_irreducible_recurrence(int n_max) {
  check_formula_cap(n_max);
  std::vector<std::int64_t> irr(n_max + 1, 0);
  for (int n = 1; n <= n_max; ++n) {
    std::int64_t v = static_cast<std::int64_t>(factorial(n));
    for (int i = 1; i < n; ++i) v -= irr[i] * static_cast<std::int64_t>(factorial(n - i));
    irr[n] = v;
  }
  return {"irreducible", "formula", {irr.begin() + 1, irr.end()}};
}

std::int64_t count_irreducible_bruteforce(int n, int workers) {
  check_count_cap(n);
  return parallel_fold(
      n, std::int64_t{0},
      [](std::int64_t& acc, const Permutation& w) {
        if (w.is_irreducible()) ++acc;
      },
      [](std::int64_t a, std::int64_t b) { return a + b; }, workers);
}

SequenceTable count_unsortable_formula(int n_max) {
  check_formula_cap(n_max);
  const SequenceTable irr = count_irreducible_recurrence(n_max);
  std::vector<std::int64_t> values(n_max);
  std::int64_t irr_sum = 0;
  for (int n = 1; n <= n_max; ++n) {
    irr_sum += irr.values[n - 1];
    values[n - 1] = static_cast<std::int64_t>(factorial(n)) - irr_sum;
  }
  return {"unsortable", "formula", std::move(values)};
}

std::int64_t count_unsortable_bruteforce(int n, int workers) {
  check_count_cap(n);
  return parallel_fold(
      n, std::int64_t{0},
      [](std::int64_t& acc, const Permutation& w) {
        if (w.is_unsortable()) ++acc;
      },
      [](std::int64_t a, std::int64_t b) { return a + b; }, workers);
}

SortableCensus sortable_census(const ShuffleRule& rule, int n, bool materialize, int workers) {
  check_count_cap(n);
  if (materialize) {
    if (n > kMaterializeCap)
      throw NExceedsExhaustiveCap("n = " + std::to_string(n) +
                                  " exceeds the materialization cap of " +
                                  std::to_string(kMaterializeCap));
    std::vector<Permutation> members;
    for (const Permutation& w : all_permutations(n))
      if (sorts(rule, w)) members.push_back(w);
    const std::int64_t count = static_cast<std::int64_t>(members.size());
    return {count, std::move(members)};
  }
  const std::int64_t count = parallel_fold(
      n, std::int64_t{0},
      [&rule](std::int64_t& acc, const Permutation& w) {
        if (sorts(rule, w)) ++acc;
      },
      [](std::int64_t a, std::int64_t b) { return a + b; }, workers);
  return {count, std::nullopt};
}

Ratio mckinley_ratio_probe(int n, int workers) {
  check_count_cap(n);
  const std::int64_t count = sortable_census(mckinley_shuffle(), n, false, workers).count;
  const std::int64_t total = static_cast<std::int64_t>(factorial(n));
  // count/n! < e/n in exact arithmetic, with e bounded above by
  // 27182818285 / 10^10.
  const unsigned __int128 lhs =
      static_cast<unsigned __int128>(count) * 10000000000ULL * static_cast<unsigned>(n);
  const unsigned __int128 rhs = static_cast<unsigned __int128>(total) * 27182818285ULL;
  if (lhs >= rhs)
    throw Error("sortable ratio " + std::to_string(count) + "/" + std::to_string(total) +
                " is not below e/" + std::to_string(n));
  return {count, total};
}

std::vector<Permutation> topswops_tuple_sortables(int n) {
  check_count_cap(n);
  const ShuffleRule rule = topswops_shuffle();
  std::set<Permutation> products;
  const int choices = n - 1;  // subsets of {2,...,n}
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << choices); ++mask) {
    Permutation w = Permutation::identity(n);
    for (int b = 0; b < choices; ++b)
      if (mask & (std::uint32_t{1} << b)) w = w * Permutation::reflection(n, b + 2);
    if (!products.insert(w).second)
      throw Error("reflection products over increasing tuples are not distinct at n = " +
                  std::to_string(n));
  }
  for (const Permutation& w : products)
    if (!sorts(rule, w)) throw Error("tuple product " + to_string(w) + " is not sorted");
  return {products.begin(), products.end()};
}

ValidationResult wilf_increase_check(const ShuffleRule& rule, int n) {
  check_validation_cap(n);
  for (const Permutation& w : all_permutations(n)) {
    if (w.front() == 1) continue;
    const Permutation f = rule.apply(w);
    if (f.wilf_number_doubled() <= w.wilf_number_doubled())
      return ValidationResult::fail(w, "Wilf number did not increase: " +
                                           std::to_string(w.wilf_number_doubled()) + " -> " +
                                           std::to_string(f.wilf_number_doubled()) +
                                           " (doubled)");
  }
  return ValidationResult::pass();
}

bool are_equivalent(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw SizeMismatch("cannot compare permutations of sizes " + std::to_string(a.size()) +
                       " and " + std::to_string(b.size()));
  const int k = a.front();
  if (b.front() != k) return false;
  for (int i = k + 1; i <= a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

std::int64_t class_count_bruteforce(int n) {
  check_validation_cap(n);
  std::unordered_set<std::uint64_t> keys;
  for (const Permutation& w : all_permutations(n)) keys.insert(class_key(w));
  return static_cast<std::int64_t>(keys.size());
}

std::int64_t class_count_formula(int n) {
  check_formula_cap(n);
  std::int64_t total = 0;
  for (int k = 1; k <= n; ++k) {
    std::int64_t term = 1;  // (n-1)!/(k-1)! = k (k+1) ... (n-1)
    for (int j = k; j <= n - 1; ++j) term *= j;
    total += term;
  }
  return total;
}

ValidationResult unsortable_closure_check(const ShuffleRule& rule, int n) {
  check_validation_cap(n);
  for (const Permutation& w : all_permutations(n)) {
    if (!w.is_unsortable()) continue;
    const Permutation f = rule.apply(w);
    if (!f.is_unsortable())
      return ValidationResult::fail(w, "image " + to_string(f) + " left the unsortable set");
    if (f.irreducibility_index() > w.irreducibility_index())
      return ValidationResult::fail(
          w, "irreducibility index grew: " + std::to_string(w.irreducibility_index()) + " -> " +
                 std::to_string(f.irreducibility_index()));
  }
  return ValidationResult::pass();
}

ValidationResult max_descent_check(int n) {
  check_validation_cap(n);
  for (const ShuffleRule& rule : {max_shuffle(), max_shuffle_ascending()}) {
    for (const Permutation& w : all_permutations(n)) {
      const int k = w.front();
      const int iw = w.irreducibility_index();
      const Permutation m = rule.apply(w);
      if (iw < k)
        return ValidationResult::fail(w, rule.name() + ": irreducibility index " +
                                             std::to_string(iw) + " below the front card");
      if (w.front() == m.front() && (k != 1 || m != w))
        return ValidationResult::fail(w, rule.name() +
                                             ": front card unchanged on a non-terminated deck");
      if (w.front() >= m.front()) {
        // Termination within k-1 further steps (and so within n-1).
        Permutation cur = w;
        for (int step = 0; step < k - 1; ++step) cur = rule.apply(cur);
        if (cur.front() != 1)
          return ValidationResult::fail(w, rule.name() +
                                               ": not terminated k-1 steps after a front-card "
                                               "descent");
      }
      const int im = m.irreducibility_index();
      if (iw > k && im != iw)
        return ValidationResult::fail(w, rule.name() + ": irreducibility index changed from " +
                                             std::to_string(iw) + " to " + std::to_string(im) +
                                             " above the front card");
      if (iw == k && k >= 2 && im != k - 1)
        return ValidationResult::fail(w, rule.name() + ": irreducibility index " +
                                             std::to_string(im) + " instead of " +
                                             std::to_string(k - 1));
    }
  }
  return ValidationResult::pass();
}

}  // namespace homing
