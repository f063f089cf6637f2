#ifndef HOMING_PERM_HPP
#define HOMING_PERM_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homing/errors.hpp"

namespace homing {

class Permutation;

namespace detail {
// Trusted constructor for internal hot paths; the caller guarantees that
// values[0..n) is a bijection on [n].
Permutation make_unchecked(int n, const std::uint8_t* values);
// In-place step to the lexicographic successor; false once the last
// permutation has been passed. Preserves the bijection invariant.
bool advance_lex(Permutation& w);
}  // namespace detail

// Disjoint cycles in canonical form: every cycle starts at its minimum,
// cycles are sorted by those minima, fixed points appear as 1-cycles.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  bool operator==(const CycleDecomposition&) const = default;
};

// A bijection w on [n] = {1,...,n}, stored in one-line notation.
// Immutable after construction; all positions and values are 1-based.
// Deck sizes are capped at 20 so ranks and doubled Wilf numbers stay
// inside 64 bits.
class Permutation {
 public:
  static constexpr int kMaxN = 20;

  // The identity in S_1.
  Permutation() = default;

  static Permutation identity(int n);
  static Permutation from_one_line(std::span<const int> entries);
  static Permutation from_one_line(std::initializer_list<int> entries);
  // The transposition t_{i,j} in S_n, i != j.
  static Permutation transposition(int n, int i, int j);
  // The cycle mapping elems[t] to elems[t+1] (cyclically), fixing the rest.
  static Permutation cycle(int n, std::span<const int> elems);
  static Permutation cycle(int n, std::initializer_list<int> elems);
  // The prefix reversal r_m: sends 1,...,m to m,...,1 and fixes the rest.
  static Permutation reflection(int n, int m);

  int size() const { return n_; }
  // w(i) for i in [n].
  int operator()(int i) const;
  // The front card w(1).
  int front() const { return values_[0]; }
  bool is_identity() const;

  // Raw one-line view: one_line()[i] == w(i+1).
  std::span<const std::uint8_t> one_line() const {
    return {values_.data(), static_cast<std::size_t>(n_)};
  }

  Permutation inverse() const;
  // Composition: (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  CycleDecomposition cycle_decomposition() const;

  // The smallest k in [n] with w([k]) = [k].
  int irreducibility_index() const;
  bool is_irreducible() const;
  // True iff some i > irreducibility_index() has w(i) != i.
  bool is_unsortable() const;
  // Sum of 2^(i-1) over fixed points i of w. This is twice the Wilf
  // number, which keeps the i = 1 addend integral.
  std::uint64_t wilf_number_doubled() const;
  // True iff every element outside the orbit of 1 is a fixed point
  // (the identity qualifies).
  bool is_single_cycle_containing_one() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  friend Permutation detail::make_unchecked(int, const std::uint8_t*);
  friend bool detail::advance_lex(Permutation&);

  std::uint8_t n_ = 1;
  std::array<std::uint8_t, kMaxN> values_{1};  // zero-padded past n_
};

// "2 3 4 1 5" (single spaces).
std::string to_string(const Permutation& w);

// Accepts integers separated by spaces or commas; anything else raises
// ParseError naming the offending token.
Permutation parse_one_line(std::string_view text);

}  // namespace homing

#endif  // HOMING_PERM_HPP
