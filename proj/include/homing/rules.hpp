#ifndef HOMING_RULES_HPP
#define HOMING_RULES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homing/perm.hpp"

namespace homing {

// A homing shuffle: a pure deterministic map S_n -> S_n that, with
// k = w(1), fixes k in the image and leaves every position above k
// untouched. The factories below produce rules that satisfy this by
// construction; arbitrary maps can be wrapped for testing validators.
class ShuffleRule {
 public:
  using ApplyFn = std::function<Permutation(const Permutation&)>;

  ShuffleRule(std::string name, ApplyFn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  const std::string& name() const { return name_; }
  Permutation apply(const Permutation& w) const { return fn_(w); }
  Permutation operator()(const Permutation& w) const { return fn_(w); }

 private:
  std::string name_;
  ApplyFn fn_;
};

// Rearranges the remainder cards (w(2),...,w(k)) into the order they will
// occupy positions 1..k-1; must return a permutation of its input.
using RemainderPolicy =
    std::function<std::vector<int>(const std::vector<int>& remainder, const Permutation& w)>;

// w -> w * t_{1,k}: swaps the front card with the card at position k.
ShuffleRule transposition_shuffle();
// w -> w * (1,2,...,k): front card to position k, the cards in between
// move one step up.
ShuffleRule mckinley_shuffle();
// w -> w * r_k: picks up the first k cards and puts them back reversed.
ShuffleRule topswops_shuffle();
// The max shuffle <w(k), k, k'> * w with k' = max(w([2,k])); degenerates
// to the transposition <w(k), k> when k' = w(k), and to the identity map
// when k = 1.
ShuffleRule max_shuffle();
// A second max shuffle: k' up front, k home, the remaining middle cards
// in increasing order.
ShuffleRule max_shuffle_ascending();
// An arbitrary homing shuffle: the remainder order is a pure function of
// (seed, one-line notation of w).
ShuffleRule seeded_shuffle(std::uint64_t seed);
ShuffleRule custom_shuffle(std::string name, RemainderPolicy policy);

// The five parameterless rules above.
std::vector<ShuffleRule> builtin_shuffles();

// CLI vocabulary: "transposition" | "mckinley" | "topswops" | "max" |
// "max-asc" | "seeded:<u64>". Throws UnknownKind otherwise.
ShuffleRule rule_by_name(std::string_view name);

struct ValidationResult {
  bool ok;
  std::optional<Permutation> counterexample;
  std::string detail;

  static ValidationResult pass() { return {true, std::nullopt, ""}; }
  static ValidationResult fail(const Permutation& w, std::string what) {
    return {false, w, std::move(what)};
  }
  explicit operator bool() const { return ok; }
};

inline constexpr int kValidationCap = 9;

// Exhaustively checks both homing axioms (and apply determinism) over S_n,
// n <= 9. Reports the lexicographically first counterexample.
ValidationResult validate_homing(const ShuffleRule& rule, int n);

// validate_homing plus the max-shuffle condition: whenever w(1) != 1 the
// new front card is max(w([2,k])).
ValidationResult validate_max(const ShuffleRule& rule, int n);

// The three set identities relating rule(w) to w: images of [i,j] above k
// agree, images of prefixes [i] agree for i >= k, and the image of [k-1]
// is w([k]) minus {k}.
bool prefix_sets_check(const ShuffleRule& rule, const Permutation& w);

}  // namespace homing

#endif  // HOMING_RULES_HPP
