#pragma once

/// \file
/// Permutations in one-line notation, classical pattern containment and the
/// structural operators used throughout the library (reverse, direct and skew
/// sums, first-two swap).
///
/// Values are 1-based as in one-line notation; positions exposed through
/// `operator[]` are 0-based, positions reported in an `Occurrence` are
/// 1-based.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sigstack {

/// Raised for malformed permutation or pattern text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Permutation {
 public:
  using value_type = int;
  using const_iterator = std::vector<int>::const_iterator;

  /// The empty permutation.
  Permutation() = default;

  /// Throws std::invalid_argument unless `values` is a bijection onto 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  /// Skips validation. Callers guarantee the bijection invariant.
  static Permutation unchecked(std::vector<int> values);

  static Permutation identity(std::size_t n);
  static Permutation decreasing(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  int operator[](std::size_t i) const noexcept { return values_[i]; }
  std::span<const int> values() const noexcept { return values_; }
  const_iterator begin() const noexcept { return values_.begin(); }
  const_iterator end() const noexcept { return values_.end(); }

  bool is_identity() const noexcept;

  /// Separated form, e.g. "2 4 1 3". Empty permutation gives "".
  std::string to_string() const;
  /// Digit string such as "2413" when every value is a single digit,
  /// otherwise the separated form.
  std::string compact() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Accepts "2 4 1 3", "2,4,1,3" or the compact "2413" (n <= 9 only).
/// Blank input is the empty permutation.
Permutation parse_permutation(std::string_view text);

/// Permutation order-isomorphic to a word of distinct integers.
Permutation standardize(std::span<const int> word);

Permutation reverse(const Permutation& p);
Permutation direct_sum(const Permutation& a, const Permutation& b);
Permutation skew_sum(const Permutation& a, const Permutation& b);
/// Swaps the first two entries. Throws std::invalid_argument if |s| < 2.
Permutation hat(const Permutation& s);

/// Whether some subsequence of `host` is order-isomorphic to `pattern`.
/// `host` may be any word of distinct integers. The empty pattern is
/// contained in everything.
bool contains(std::span<const int> host, const Permutation& pattern);
inline bool contains(const Permutation& host, const Permutation& pattern) {
  return contains(host.values(), pattern);
}

/// The general backtracking search behind `contains`, without the short
/// pattern fast path. Exposed so the two routes can be checked against
/// each other.
bool contains_backtracking(std::span<const int> host, const Permutation& pattern);

/// True iff `host` contains none of `basis`.
bool avoids_all(std::span<const int> host, std::span<const Permutation> basis);

struct Occurrence {
  std::vector<std::size_t> indices;  // strictly increasing, 1-based

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Lazily walks every occurrence of a pattern in a host, in lexicographic
/// order of the index tuples.
class OccurrenceRange : public std::ranges::view_interface<OccurrenceRange> {
 public:
  class iterator {
   public:
    using value_type = Occurrence;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    const Occurrence& operator*() const { return current_; }
    const Occurrence* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class OccurrenceRange;
    iterator(const OccurrenceRange* range);
    void advance(bool resume);

    const OccurrenceRange* range_ = nullptr;
    std::vector<std::size_t> slots_;  // 0-based host positions
    Occurrence current_;
    bool done_ = true;
  };

  OccurrenceRange() = default;
  OccurrenceRange(Permutation host, Permutation pattern)
      : host_(std::move(host)), pattern_(std::move(pattern)) {}

  iterator begin() const { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  Permutation host_;
  Permutation pattern_;
};

OccurrenceRange occurrences(const Permutation& host, const Permutation& pattern);

/// Lexicographic walk over S_n, optionally restricted to permutations with a
/// given first entry (the partitioning used by the parallel enumerators).
class PermutationRange : public std::ranges::view_interface<PermutationRange> {
 public:
  class iterator {
   public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    const Permutation& operator*() const { return current_; }
    const Permutation* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class PermutationRange;
    iterator(std::size_t n, int first);

    std::vector<int> word_;
    Permutation current_;
    std::size_t fixed_ = 0;
    bool done_ = true;
  };

  PermutationRange() = default;
  /// `first == 0` means no restriction.
  PermutationRange(std::size_t n, int first = 0) : n_(n), first_(first) {}

  iterator begin() const { return iterator(n_, first_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  std::size_t n_ = 0;
  int first_ = 0;
};

inline PermutationRange all_permutations(std::size_t n) { return PermutationRange(n); }

/// Permutations of length n avoiding every pattern of `basis`, lazily and in
/// lexicographic order.
inline auto avoiders(std::size_t n, std::vector<Permutation> basis) {
  return all_permutations(n) |
         std::views::filter([basis = std::move(basis)](const Permutation& p) {
           return avoids_all(p.values(), basis);
         });
}

/// Next permutation in lexicographic order of the tail `word[fixed..]`.
/// Returns false after the last one (leaving `word` sorted again).
bool next_tail_permutation(std::vector<int>& word, std::size_t fixed);

}  // namespace sigstack
