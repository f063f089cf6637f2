#ifndef HOMING_ENUMERATE_HPP
#define HOMING_ENUMERATE_HPP

#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

#include "homing/errors.hpp"
#include "homing/perm.hpp"

namespace homing {

// Full sweeps over S_n stop here: 12! is just under half a billion states.
inline constexpr int kEnumerationCap = 12;
inline constexpr int kMaxWorkers = 256;

// n! for n in [0, 20].
std::uint64_t factorial(int n);

// Lexicographic index of w among the one-line notations of S_n, in [0, n!).
std::uint64_t rank_of(const Permutation& w);
// Inverse of rank_of (factorial number system).
Permutation unrank(int n, std::uint64_t rank);

// Half-open slice [begin_rank, end_rank) of S_n in lexicographic order.
struct RankRange {
  int n;
  std::uint64_t begin_rank;
  std::uint64_t end_rank;
};

// Streams all of S_n in strictly increasing lexicographic one-line order.
class LexRange {
 public:
  explicit LexRange(int n);

  struct sentinel {};

  class iterator {
   public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;

    explicit iterator(int n) : current_(Permutation::identity(n)) {}

    const Permutation& operator*() const { return current_; }
    iterator& operator++() {
      done_ = !detail::advance_lex(current_);
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, sentinel) { return it.done_; }

   private:
    Permutation current_;
    bool done_ = false;
  };

  iterator begin() const { return iterator(n_); }
  sentinel end() const { return {}; }
  int n() const { return n_; }

 private:
  int n_;
};

LexRange all_permutations(int n);

namespace detail {
void check_enumeration_cap(int n);
// Chunk boundary i of total split into parts pieces.
inline std::uint64_t chunk_bound(std::uint64_t total, int parts, int i) {
  return total / parts * i + total % parts * i / parts;
}
}  // namespace detail

// Applies fn(rank, w) over a rank slice, walking with next-permutation steps.
template <class Fn>
void for_each_ranked(const RankRange& range, Fn&& fn) {
  if (range.begin_rank >= range.end_rank) return;
  Permutation w = unrank(range.n, range.begin_rank);
  for (std::uint64_t r = range.begin_rank; r != range.end_rank; ++r) {
    fn(r, static_cast<const Permutation&>(w));
    detail::advance_lex(w);
  }
}

// Deterministic data-parallel fold over S_n. fold(acc, rank, w) mutates a
// worker-local accumulator; combine(a, b) must be associative and
// commutative with `unit` as identity, so the result is independent of the
// worker count and chunking.
template <class A, class FoldFn, class CombineFn>
A parallel_fold_ranked(int n, A unit, FoldFn fold, CombineFn combine, int workers = 1) {
  detail::check_enumeration_cap(n);
  const std::uint64_t total = factorial(n);
  if (workers < 1) workers = 1;
  if (workers > kMaxWorkers) workers = kMaxWorkers;
  if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<int>(total);

  if (workers == 1) {
    A acc = std::move(unit);
    for_each_ranked(RankRange{n, 0, total},
                    [&](std::uint64_t r, const Permutation& w) { fold(acc, r, w); });
    return acc;
  }

  std::vector<A> results(workers, unit);
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) {
      pool.emplace_back([&, i] {
        try {
          const RankRange slice{n, detail::chunk_bound(total, workers, i),
                                detail::chunk_bound(total, workers, i + 1)};
          A local = std::move(results[i]);
          for_each_ranked(slice,
                          [&](std::uint64_t r, const Permutation& w) { fold(local, r, w); });
          results[i] = std::move(local);
        } catch (...) {
          failures[i] = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  A acc = std::move(results[0]);
  for (int i = 1; i < workers; ++i) acc = combine(std::move(acc), std::move(results[i]));
  return acc;
}

// Rank-blind variant.
template <class A, class FoldFn, class CombineFn>
A parallel_fold(int n, A unit, FoldFn fold, CombineFn combine, int workers = 1) {
  return parallel_fold_ranked(
      n, std::move(unit),
      [&fold](A& acc, std::uint64_t, const Permutation& w) { fold(acc, w); }, combine, workers);
}

// map(w) -> A per permutation, merged with combine; equals the sequential
// left fold over all_permutations(n) for any worker count.
template <class A, class MapFn, class CombineFn>
A parallel_reduce(int n, MapFn map, CombineFn combine, A unit, int workers = 1) {
  return parallel_fold(
      n, unit, [&map, &combine](A& acc, const Permutation& w) { acc = combine(acc, map(w)); },
      combine, workers);
}

}  // namespace homing

#endif  // HOMING_ENUMERATE_HPP
