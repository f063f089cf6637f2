#include "homing/rules.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "homing/enumerate.hpp"

namespace homing {

namespace {

using Buf = std::array<std::uint8_t, Permutation::kMaxN>;

Buf to_buf(const Permutation& w) {
  Buf b{};
  const auto v = w.one_line();
  std::copy(v.begin(), v.end(), b.begin());
  return b;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void check_validation_cap(int n) {
  if (n < 1) throw IndexOutOfRange("deck size must be at least 1, got " + std::to_string(n));
  if (n > kValidationCap)
    throw NExceedsExhaustiveCap("n = " + std::to_string(n) +
                                " exceeds the exhaustive-validation cap of " +
                                std::to_string(kValidationCap));
}

int max_of_remainder(const Permutation& w, int k) {
  int m = 0;
  for (int i = 2; i <= k; ++i) m = std::max(m, static_cast<int>(w.one_line()[i - 1]));
  return m;
}

}  // namespace

ShuffleRule transposition_shuffle() {
  return {"transposition", [](const Permutation& w) {
            const int k = w.front();
            if (k == 1) return w;
            Buf b = to_buf(w);
            std::swap(b[0], b[k - 1]);
            return detail::make_unchecked(w.size(), b.data());
          }};
}

ShuffleRule mckinley_shuffle() {
  return {"mckinley", [](const Permutation& w) {
            const int k = w.front();
            if (k == 1) return w;
            Buf b = to_buf(w);
            for (int i = 0; i + 1 < k; ++i) b[i] = b[i + 1];
            b[k - 1] = static_cast<std::uint8_t>(k);
            return detail::make_unchecked(w.size(), b.data());
          }};
}

ShuffleRule topswops_shuffle() {
  return {"topswops", [](const Permutation& w) {
            const int k = w.front();
            if (k == 1) return w;
            Buf b = to_buf(w);
            std::reverse(b.begin(), b.begin() + k);
            return detail::make_unchecked(w.size(), b.data());
          }};
}

ShuffleRule max_shuffle() {
  return {"max", [](const Permutation& w) {
            const int k = w.front();
            if (k == 1) return w;
            Buf b = to_buf(w);
            const int wk = b[k - 1];
            const int kp = max_of_remainder(w, k);
            // Relabel values by the cycle <w(k), k, k'> (or <w(k), k> when
            // k' = w(k)) applied on the left.
            for (int i = 0; i < w.size(); ++i) {
              const int v = b[i];
              if (v == wk)
                b[i] = static_cast<std::uint8_t>(k);
              else if (v == k)
                b[i] = static_cast<std::uint8_t>(kp == wk ? wk : kp);
              else if (v == kp)
                b[i] = static_cast<std::uint8_t>(wk);
            }
            return detail::make_unchecked(w.size(), b.data());
          }};
}

ShuffleRule max_shuffle_ascending() {
  return {"max-asc", [](const Permutation& w) {
            const int k = w.front();
            if (k == 1) return w;
            Buf b = to_buf(w);
            // After sorting, b[1..k-2] already hold the middle cards in
            // increasing order and b[k-1] is the largest moved card.
            std::sort(b.begin() + 1, b.begin() + k);
            b[0] = b[k - 1];
            b[k - 1] = static_cast<std::uint8_t>(k);
            return detail::make_unchecked(w.size(), b.data());
          }};
}

ShuffleRule seeded_shuffle(std::uint64_t seed) {
  return {"seeded:" + std::to_string(seed), [seed](const Permutation& w) {
            const int k = w.front();
            if (k == 1) return w;
            Buf b = to_buf(w);
            std::uint64_t state = seed ^ 0xa0761d6478bd642fULL;
            for (const std::uint8_t v : w.one_line()) {
              state ^= v;
              (void)splitmix64(state);
            }
            for (int i = 0; i + 1 < k; ++i) b[i] = b[i + 1];
            b[k - 1] = static_cast<std::uint8_t>(k);
            for (int i = k - 2; i > 0; --i) {
              const int j = static_cast<int>(splitmix64(state) % (i + 1));
              std::swap(b[i], b[j]);
            }
            return detail::make_unchecked(w.size(), b.data());
          }};
}

ShuffleRule custom_shuffle(std::string name, RemainderPolicy policy) {
  return {std::move(name), [policy = std::move(policy)](const Permutation& w) {
            const int k = w.front();
            if (k == 1) return w;
            std::vector<int> remainder;
            remainder.reserve(k - 1);
            for (int i = 2; i <= k; ++i) remainder.push_back(w(i));
            std::vector<int> rearranged = policy(remainder, w);
            if (rearranged.size() != remainder.size())
              throw NotABijection("remainder policy changed the number of cards");
            std::vector<int> full = std::move(rearranged);
            full.push_back(k);
            for (int i = k + 1; i <= w.size(); ++i) full.push_back(w(i));
            // Validates the result, so a policy that drops or invents cards
            // surfaces as NotABijection.
            return Permutation::from_one_line(full);
          }};
}

std::vector<ShuffleRule> builtin_shuffles() {
  return {transposition_shuffle(), mckinley_shuffle(), topswops_shuffle(), max_shuffle(),
          max_shuffle_ascending()};
}

ShuffleRule rule_by_name(std::string_view name) {
  if (name == "transposition") return transposition_shuffle();
  if (name == "mckinley") return mckinley_shuffle();
  if (name == "topswops") return topswops_shuffle();
  if (name == "max") return max_shuffle();
  if (name == "max-asc") return max_shuffle_ascending();
  constexpr std::string_view prefix = "seeded:";
  if (name.substr(0, prefix.size()) == prefix) {
    const std::string_view digits = name.substr(prefix.size());
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (ec == std::errc{} && ptr == digits.data() + digits.size()) return seeded_shuffle(seed);
  }
  throw UnknownKind("unknown shuffle '" + std::string(name) + "'");
}

ValidationResult validate_homing(const ShuffleRule& rule, int n) {
  check_validation_cap(n);
  for (const Permutation& w : all_permutations(n)) {
    const int k = w.front();
    const Permutation f = rule.apply(w);
    if (rule.apply(w) != f) return ValidationResult::fail(w, "rule is not deterministic");
    if (f.size() != n) return ValidationResult::fail(w, "rule changed the deck size");
    if (f(k) != k)
      return ValidationResult::fail(
          w, "axiom (a): f(w)(" + std::to_string(k) + ") = " + std::to_string(f(k)));
    for (int i = k + 1; i <= n; ++i)
      if (f(i) != w(i))
        return ValidationResult::fail(w, "axiom (b): position " + std::to_string(i) +
                                             " above the front card changed");
  }
  return ValidationResult::pass();
}

ValidationResult validate_max(const ShuffleRule& rule, int n) {
  check_validation_cap(n);
  ValidationResult homing = validate_homing(rule, n);
  if (!homing) return homing;
  for (const Permutation& w : all_permutations(n)) {
    const int k = w.front();
    if (k == 1) continue;
    const Permutation f = rule.apply(w);
    const int expected = max_of_remainder(w, k);
    if (f.front() != expected)
      return ValidationResult::fail(w, "front card " + std::to_string(f.front()) +
                                           " is not the maximum " + std::to_string(expected) +
                                           " of the moved cards");
  }
  return ValidationResult::pass();
}

bool prefix_sets_check(const ShuffleRule& rule, const Permutation& w) {
  const int n = w.size();
  const int k = w.front();
  const Permutation f = rule.apply(w);
  // prefix_w[i] = bitmask of w([i]).
  std::array<std::uint32_t, Permutation::kMaxN + 1> prefix_w{}, prefix_f{};
  for (int i = 1; i <= n; ++i) {
    prefix_w[i] = prefix_w[i - 1] | (std::uint32_t{1} << w(i));
    prefix_f[i] = prefix_f[i - 1] | (std::uint32_t{1} << f(i));
  }
  for (int i = k; i <= n; ++i)
    if (prefix_f[i] != prefix_w[i]) return false;
  for (int i = k + 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if ((prefix_f[j] ^ prefix_f[i - 1]) != (prefix_w[j] ^ prefix_w[i - 1])) return false;
  return prefix_f[k - 1] == (prefix_w[k] & ~(std::uint32_t{1} << k));
}

}  // namespace homing
