#include "homing/perm.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cstddef>

namespace homing {

namespace {

void check_deck_size(int n) {
  if (n < 1) throw IndexOutOfRange("deck size must be at least 1, got " + std::to_string(n));
  if (n > Permutation::kMaxN)
    throw SizeExceeded("deck size " + std::to_string(n) + " exceeds the cap of " +
                       std::to_string(Permutation::kMaxN));
}

void check_position(int n, int i) {
  if (i < 1 || i > n)
    throw IndexOutOfRange("position " + std::to_string(i) + " outside [1," + std::to_string(n) +
                          "]");
}

}  // namespace

namespace detail {

Permutation make_unchecked(int n, const std::uint8_t* values) {
#ifndef NDEBUG
  std::uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    assert(values[i] >= 1 && values[i] <= n);
    assert(!(seen & (std::uint32_t{1} << values[i])));
    seen |= std::uint32_t{1} << values[i];
  }
#endif
  Permutation w;
  w.n_ = static_cast<std::uint8_t>(n);
  w.values_.fill(0);
  std::copy_n(values, n, w.values_.begin());
  return w;
}

bool advance_lex(Permutation& w) {
  return std::next_permutation(w.values_.begin(), w.values_.begin() + w.n_);
}

}  // namespace detail

Permutation Permutation::identity(int n) {
  check_deck_size(n);
  std::array<std::uint8_t, kMaxN> buf{};
  for (int i = 0; i < n; ++i) buf[i] = static_cast<std::uint8_t>(i + 1);
  return detail::make_unchecked(n, buf.data());
}

Permutation Permutation::from_one_line(std::span<const int> entries) {
  if (entries.empty()) throw NotABijection("one-line notation must be nonempty");
  if (entries.size() > kMaxN)
    throw SizeExceeded("one-line notation of length " + std::to_string(entries.size()) +
                       " exceeds the cap of " + std::to_string(kMaxN));
  const int n = static_cast<int>(entries.size());
  std::uint32_t seen = 0;
  std::array<std::uint8_t, kMaxN> buf{};
  for (int i = 0; i < n; ++i) {
    const int v = entries[i];
    if (v < 1 || v > n)
      throw NotABijection("value " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
    const std::uint32_t bit = std::uint32_t{1} << v;
    if (seen & bit) throw NotABijection("duplicate value " + std::to_string(v));
    seen |= bit;
    buf[i] = static_cast<std::uint8_t>(v);
  }
  return detail::make_unchecked(n, buf.data());
}

Permutation Permutation::from_one_line(std::initializer_list<int> entries) {
  return from_one_line(std::span<const int>(entries.begin(), entries.size()));
}

Permutation Permutation::transposition(int n, int i, int j) {
  check_deck_size(n);
  check_position(n, i);
  check_position(n, j);
  if (i == j) throw DuplicateElement("transposition needs two distinct points, got " +
                                     std::to_string(i) + " twice");
  Permutation w = identity(n);
  std::swap(w.values_[i - 1], w.values_[j - 1]);
  return w;
}

Permutation Permutation::cycle(int n, std::span<const int> elems) {
  check_deck_size(n);
  std::uint32_t seen = 0;
  for (const int e : elems) {
    check_position(n, e);
    const std::uint32_t bit = std::uint32_t{1} << e;
    if (seen & bit) throw DuplicateElement("element " + std::to_string(e) + " repeats in cycle");
    seen |= bit;
  }
  Permutation w = identity(n);
  const std::size_t m = elems.size();
  for (std::size_t t = 0; t < m; ++t)
    w.values_[elems[t] - 1] = static_cast<std::uint8_t>(elems[(t + 1) % m]);
  return w;
}

Permutation Permutation::cycle(int n, std::initializer_list<int> elems) {
  return cycle(n, std::span<const int>(elems.begin(), elems.size()));
}

Permutation Permutation::reflection(int n, int m) {
  check_deck_size(n);
  check_position(n, m);
  Permutation w = identity(n);
  for (int i = 0; i < m; ++i) w.values_[i] = static_cast<std::uint8_t>(m - i);
  return w;
}

int Permutation::operator()(int i) const {
  check_position(n_, i);
  return values_[i - 1];
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (values_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation w;
  w.n_ = n_;
  w.values_.fill(0);
  for (int i = 0; i < n_; ++i) w.values_[values_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return w;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n_ != b.n_)
    throw SizeMismatch("cannot compose permutations of sizes " + std::to_string(a.n_) + " and " +
                       std::to_string(b.n_));
  Permutation w;
  w.n_ = a.n_;
  w.values_.fill(0);
  for (int i = 0; i < a.n_; ++i) w.values_[i] = a.values_[b.values_[i] - 1];
  return w;
}

CycleDecomposition Permutation::cycle_decomposition() const {
  CycleDecomposition d;
  std::uint32_t visited = 0;
  for (int start = 1; start <= n_; ++start) {
    if (visited & (std::uint32_t{1} << start)) continue;
    std::vector<int> cyc;
    int cur = start;
    do {
      visited |= std::uint32_t{1} << cur;
      cyc.push_back(cur);
      cur = values_[cur - 1];
    } while (cur != start);
    d.cycles.push_back(std::move(cyc));
  }
  return d;
}

int Permutation::irreducibility_index() const {
  int prefix_max = 0;
  for (int k = 1; k <= n_; ++k) {
    prefix_max = std::max(prefix_max, static_cast<int>(values_[k - 1]));
    if (prefix_max == k) return k;
  }
  return n_;  // unreachable: w([n]) = [n] always
}

bool Permutation::is_irreducible() const { return irreducibility_index() == n_; }

bool Permutation::is_unsortable() const {
  const int k = irreducibility_index();
  for (int i = k + 1; i <= n_; ++i)
    if (values_[i - 1] != i) return true;
  return false;
}

std::uint64_t Permutation::wilf_number_doubled() const {
  std::uint64_t sum = 0;
  for (int i = 1; i <= n_; ++i)
    if (values_[i - 1] == i) sum += std::uint64_t{1} << (i - 1);
  return sum;
}

bool Permutation::is_single_cycle_containing_one() const {
  std::uint32_t orbit = 0;
  int cur = 1;
  do {
    orbit |= std::uint32_t{1} << cur;
    cur = values_[cur - 1];
  } while (cur != 1);
  for (int i = 1; i <= n_; ++i)
    if (!(orbit & (std::uint32_t{1} << i)) && values_[i - 1] != i) return false;
  return true;
}

std::string to_string(const Permutation& w) {
  std::string s;
  for (int i = 0; i < w.size(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(w.one_line()[i]);
  }
  return s;
}

Permutation parse_one_line(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == ',') {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != ',') ++end;
    const std::string_view token = text.substr(pos, end - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("cannot parse token '" + std::string(token) + "' as a card value");
    values.push_back(value);
    pos = end;
  }
  if (values.empty()) throw ParseError("no card values found");
  return Permutation::from_one_line(values);
}

}  // namespace homing
