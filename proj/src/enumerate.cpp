#include "homing/enumerate.hpp"

#include <array>
#include <string>

namespace homing {

namespace {

constexpr std::array<std::uint64_t, 21> kFactorials = [] {
  std::array<std::uint64_t, 21> f{};
  f[0] = 1;
  for (int i = 1; i <= 20; ++i) f[i] = f[i - 1] * i;
  return f;
}();

}  // namespace

namespace detail {

void check_enumeration_cap(int n) {
  if (n < 1) throw IndexOutOfRange("deck size must be at least 1, got " + std::to_string(n));
  if (n > kEnumerationCap)
    throw NExceedsExhaustiveCap("n = " + std::to_string(n) +
                                " exceeds the exhaustive-enumeration cap of " +
                                std::to_string(kEnumerationCap));
}

}  // namespace detail

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw IndexOutOfRange("factorial argument outside [0,20]");
  return kFactorials[n];
}

std::uint64_t rank_of(const Permutation& w) {
  const int n = w.size();
  const auto values = w.one_line();
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    std::uint64_t smaller_after = 0;
    for (int j = i + 1; j < n; ++j)
      if (values[j] < values[i]) ++smaller_after;
    rank += smaller_after * kFactorials[n - 1 - i];
  }
  return rank;
}

Permutation unrank(int n, std::uint64_t rank) {
  if (n < 1) throw IndexOutOfRange("deck size must be at least 1, got " + std::to_string(n));
  if (n > Permutation::kMaxN)
    throw SizeExceeded("deck size " + std::to_string(n) + " exceeds the cap of " +
                       std::to_string(Permutation::kMaxN));
  if (rank >= kFactorials[n])
    throw RankOutOfRange("rank " + std::to_string(rank) + " outside [0," + std::to_string(n) +
                         "!)");
  std::array<std::uint8_t, Permutation::kMaxN> remaining{};
  for (int i = 0; i < n; ++i) remaining[i] = static_cast<std::uint8_t>(i + 1);
  int left = n;
  std::array<std::uint8_t, Permutation::kMaxN> buf{};
  for (int i = 0; i < n; ++i) {
    const std::uint64_t base = kFactorials[n - 1 - i];
    const int digit = static_cast<int>(rank / base);
    rank %= base;
    buf[i] = remaining[digit];
    for (int j = digit; j + 1 < left; ++j) remaining[j] = remaining[j + 1];
    --left;
  }
  return detail::make_unchecked(n, buf.data());
}

LexRange::LexRange(int n) : n_(n) { detail::check_enumeration_cap(n); }

LexRange all_permutations(int n) { return LexRange(n); }

}  // namespace homing
