#include "doctest.h"

#include <cstdint>
#include <set>
#include <vector>

#include "homing/analysis.hpp"
#include "homing/enumerate.hpp"

using namespace homing;

namespace {

const std::vector<std::int64_t> kUnsortableCounts = {0,    0,     1,      6,       31,      170,
                                                     1043, 7230,  56447,  493042,  4782139,
                                                     51122982};

// Number of decks that are a single cycle through 1: the identity plus
// sum over cycle lengths L >= 2 of (n-1)!/(n-L)!.
std::int64_t single_cycle_count(int n) {
  std::int64_t total = 1;
  for (int len = 2; len <= n; ++len) {
    std::int64_t ways = 1;
    for (int j = n - len + 1; j <= n - 1; ++j) ways *= j;
    total += ways;
  }
  return total;
}

ShuffleRule identity_map_rule() {
  return {"identity-map", [](const Permutation& w) { return w; }};
}

}  // namespace

TEST_CASE("trace of topswops on the worked deck") {
  const Trace t = iterate_trace(topswops_shuffle(), Permutation::from_one_line({2, 3, 4, 1, 5}));
  const std::vector<Permutation> expected = {
      Permutation::from_one_line({2, 3, 4, 1, 5}), Permutation::from_one_line({3, 2, 4, 1, 5}),
      Permutation::from_one_line({4, 2, 3, 1, 5}), Permutation::from_one_line({1, 3, 2, 4, 5})};
  CHECK(t.states == expected);
  CHECK(t.front_cards == std::vector<int>{2, 3, 4, 1});
  CHECK(t.steps == 3);
  CHECK_FALSE(t.sorted);
}

TEST_CASE("trace of mckinley on the worked deck") {
  const Trace t = iterate_trace(mckinley_shuffle(), Permutation::from_one_line({2, 3, 4, 1, 5}));
  const std::vector<Permutation> expected = {
      Permutation::from_one_line({2, 3, 4, 1, 5}), Permutation::from_one_line({3, 2, 4, 1, 5}),
      Permutation::from_one_line({2, 4, 3, 1, 5}), Permutation::from_one_line({4, 2, 3, 1, 5}),
      Permutation::from_one_line({2, 3, 1, 4, 5}), Permutation::from_one_line({3, 2, 1, 4, 5}),
      Permutation::from_one_line({2, 1, 3, 4, 5}), Permutation::from_one_line({1, 2, 3, 4, 5})};
  CHECK(t.states == expected);
  CHECK(t.steps == 7);
  CHECK(t.sorted);
}

TEST_CASE("terminated decks trace in zero steps") {
  for (const ShuffleRule& rule : builtin_shuffles()) {
    const Trace t = iterate_trace(rule, Permutation::identity(5));
    CHECK(t.steps == 0);
    CHECK(t.sorted);
    CHECK(t.states.size() == 1);
  }
}

TEST_CASE("steps to terminate") {
  CHECK(steps_to_terminate(transposition_shuffle(), Permutation::from_one_line({2, 3, 4, 1, 5})) ==
        3);
  CHECK(steps_to_terminate(max_shuffle(), Permutation::from_one_line({2, 3, 4, 5, 1})) == 7);
  // Every 6-cycle of S_6 takes exactly five transposition steps.
  const ShuffleRule t = transposition_shuffle();
  for (const Permutation& w : all_permutations(6)) {
    if (w.cycle_decomposition().cycles.size() != 1) continue;
    CHECK(steps_to_terminate(t, w) == 5);
  }
}

TEST_CASE("sorts") {
  CHECK(sorts(mckinley_shuffle(), Permutation::from_one_line({2, 3, 4, 1, 5})));
  CHECK_FALSE(sorts(topswops_shuffle(), Permutation::from_one_line({2, 3, 4, 1, 5})));
  CHECK_FALSE(sorts(transposition_shuffle(), Permutation::from_one_line({3, 2, 1, 5, 4})));
}

TEST_CASE("a rule that never homes trips the iteration cap") {
  CHECK_THROWS_AS(iterate_trace(identity_map_rule(), Permutation::from_one_line({2, 1})),
                  CapExceeded);
  CHECK_THROWS_AS(steps_to_terminate(identity_map_rule(), Permutation::from_one_line({2, 1})),
                  CapExceeded);
}

TEST_CASE("termination sweeps") {
  const TerminationReport t5 = termination_number(transposition_shuffle(), 5);
  CHECK(t5.tn == 4);

  const TerminationReport m5 = termination_number(max_shuffle(), 5);
  CHECK(m5.tn == 7);
  CHECK(steps_to_terminate(max_shuffle(), Permutation::from_one_line({2, 3, 4, 5, 1})) == m5.tn);

  const TerminationReport ts3 = termination_number(topswops_shuffle(), 3);
  CHECK(ts3.tn == 2);
  CHECK(ts3.least_witness == Permutation::from_one_line({2, 3, 1}));
  CHECK(ts3.witness_count == 2);

  std::uint64_t total = 0;
  for (const auto& [steps, count] : ts3.histogram) total += count;
  CHECK(total == 6);

  // Witnesses of the transposition shuffle are exactly the n-cycles.
  const TerminationReport t6 = termination_number(transposition_shuffle(), 6);
  CHECK(t6.witness_count == factorial(5));
  CHECK(t6.least_witness == Permutation::from_one_line({2, 3, 4, 5, 6, 1}));

  CHECK_THROWS_AS(termination_number(transposition_shuffle(), 13), NExceedsExhaustiveCap);
}

TEST_CASE("termination sweeps are worker-count independent") {
  const TerminationReport one = termination_number(mckinley_shuffle(), 7, 1);
  const TerminationReport eight = termination_number(mckinley_shuffle(), 7, 8);
  CHECK(one.tn == eight.tn);
  CHECK(one.least_witness == eight.least_witness);
  CHECK(one.witness_count == eight.witness_count);
  CHECK(one.histogram == eight.histogram);
}

TEST_CASE("irreducible counts") {
  const SequenceTable table = count_irreducible_recurrence(6);
  CHECK(table.values == std::vector<std::int64_t>{1, 1, 3, 13, 71, 461});
  for (int n = 1; n <= 7; ++n)
    CHECK(count_irreducible_bruteforce(n) == count_irreducible_recurrence(n).values[n - 1]);
  CHECK_THROWS_AS(count_irreducible_bruteforce(12), NExceedsExhaustiveCap);
  CHECK_THROWS_AS(count_irreducible_recurrence(21), NExceedsExhaustiveCap);
}

TEST_CASE("unsortable counts match the published sequence") {
  const SequenceTable table = count_unsortable_formula(12);
  CHECK(table.values == kUnsortableCounts);
  for (int n = 1; n <= 7; ++n) CHECK(count_unsortable_bruteforce(n) == kUnsortableCounts[n - 1]);
  CHECK(count_unsortable_bruteforce(6, 4) == 170);
}

TEST_CASE("sortable censuses") {
  // The transposition shuffle sorts exactly the single cycles through 1.
  for (int n = 1; n <= 6; ++n)
    CHECK(sortable_census(transposition_shuffle(), n).count == single_cycle_count(n));
  CHECK(single_cycle_count(3) == 5);
  CHECK(single_cycle_count(4) == 16);

  const SortableCensus listed = sortable_census(transposition_shuffle(), 4, true);
  REQUIRE(listed.members.has_value());
  CHECK(listed.members->size() == 16);
  for (const Permutation& w : *listed.members) CHECK(w.is_single_cycle_containing_one());

  // The max shuffle sorts everything outside the unsortable set.
  CHECK(sortable_census(max_shuffle(), 5).count == 120 - 31);
  for (const ShuffleRule& rule : builtin_shuffles())
    CHECK(sortable_census(rule, 1).count == 1);

  CHECK_THROWS_AS(sortable_census(max_shuffle(), 12), NExceedsExhaustiveCap);
  CHECK_THROWS_AS(sortable_census(max_shuffle(), 9, true), NExceedsExhaustiveCap);
}

TEST_CASE("mckinley ratio probe") {
  const Ratio r1 = mckinley_ratio_probe(1);
  CHECK(r1.num == 1);
  CHECK(r1.den == 1);
  // Both decks of S_2 sort.
  const Ratio r2 = mckinley_ratio_probe(2);
  CHECK(r2.num == 2);
  CHECK(r2.den == 2);
  const Ratio r5 = mckinley_ratio_probe(5);
  CHECK(r5.den == 120);
  CHECK(r5.value() <= 2.7182818285 / 5);
}

TEST_CASE("topswops tuple sortables") {
  const std::vector<Permutation> two = topswops_tuple_sortables(2);
  CHECK(two == std::vector<Permutation>{Permutation::identity(2),
                                        Permutation::from_one_line({2, 1})});

  const std::vector<Permutation> three = topswops_tuple_sortables(3);
  CHECK(three.size() == 4);
  const std::set<Permutation> set3(three.begin(), three.end());
  CHECK(set3.count(Permutation::identity(3)) == 1);
  CHECK(set3.count(Permutation::from_one_line({2, 1, 3})) == 1);      // r_2
  CHECK(set3.count(Permutation::from_one_line({3, 2, 1})) == 1);      // r_3
  CHECK(set3.count(Permutation::from_one_line({3, 1, 2})) == 1);      // r_2 r_3

  // r_2 r_3 r_4 r_2 r_5 r_4 is sortable but is not a tuple product.
  Permutation extra = Permutation::identity(5);
  for (const int m : {2, 3, 4, 2, 5, 4}) extra = extra * Permutation::reflection(5, m);
  CHECK(extra == Permutation::from_one_line({4, 1, 3, 5, 2}));
  CHECK(sorts(topswops_shuffle(), extra));
  const std::vector<Permutation> five = topswops_tuple_sortables(5);
  CHECK(five.size() == 16);
  CHECK(std::set<Permutation>(five.begin(), five.end()).count(extra) == 0);
}

TEST_CASE("wilf increase check") {
  CHECK(wilf_increase_check(topswops_shuffle(), 6).ok);
  CHECK(wilf_increase_check(seeded_shuffle(7), 6).ok);
  const ValidationResult v = wilf_increase_check(identity_map_rule(), 3);
  REQUIRE_FALSE(v.ok);
  CHECK(*v.counterexample == Permutation::from_one_line({2, 1, 3}));
}

TEST_CASE("equivalence relation") {
  CHECK(are_equivalent(Permutation::from_one_line({3, 1, 2}), Permutation::from_one_line({3, 2, 1})));
  CHECK_FALSE(
      are_equivalent(Permutation::from_one_line({2, 1, 3}), Permutation::from_one_line({2, 3, 1})));
  CHECK_THROWS_AS(are_equivalent(Permutation::identity(3), Permutation::identity(4)),
                  SizeMismatch);

  CHECK(class_count_bruteforce(3) == 5);
  CHECK(class_count_formula(3) == 5);
  for (int n = 1; n <= 7; ++n) CHECK(class_count_bruteforce(n) == class_count_formula(n));
}

TEST_CASE("front card sequences") {
  CHECK(front_card_sequence(max_shuffle(), Permutation::from_one_line({2, 3, 4, 5, 1})) ==
        std::vector<int>{2, 3, 4, 5, 4, 3, 2, 1});
  CHECK(front_card_sequence(max_shuffle_ascending(), Permutation::from_one_line({2, 3, 4, 5, 1})) ==
        std::vector<int>{2, 3, 4, 5, 4, 3, 2, 1});
  CHECK(front_card_sequence(topswops_shuffle(), Permutation::identity(3)) == std::vector<int>{1});
}

TEST_CASE("unsortable closure") {
  CHECK(unsortable_closure_check(topswops_shuffle(), 6).ok);
  CHECK(unsortable_closure_check(seeded_shuffle(123), 7).ok);
  CHECK(unsortable_closure_check(mckinley_shuffle(), 5).ok);
  CHECK_THROWS_AS(unsortable_closure_check(topswops_shuffle(), 10), NExceedsExhaustiveCap);
}

TEST_CASE("max descent facts") {
  CHECK(max_descent_check(2).ok);
  CHECK(max_descent_check(5).ok);
  CHECK_THROWS_AS(max_descent_check(10), NExceedsExhaustiveCap);
}
