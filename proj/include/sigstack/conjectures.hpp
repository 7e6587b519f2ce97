#pragma once

/// \file
/// Explorer for the conjectured equidistribution of
///   (lr_max, rl_max) on Sort(312),
///   (lr_max, lr_min) on Fishburn permutations avoiding 3412,
///   (rl_min, zeros)  on ascent sequences avoiding 201.

#include <compare>
#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sigstack/classification.hpp"
#include "sigstack/count.hpp"
#include "sigstack/parallel.hpp"
#include "sigstack/patterns.hpp"
#include "sigstack/permutation.hpp"

namespace sigstack {

enum class Statistic { lr_max, rl_max, lr_min, rl_min };

std::string_view to_string(Statistic s);

std::size_t stat(std::span<const int> p, Statistic which);
inline std::size_t stat(const Permutation& p, Statistic which) { return stat(p.values(), which); }

/// x_1 = 0 and x_{i+1} <= asc(x_1..x_i) + 1.
class AscentSequence {
 public:
  /// Throws std::invalid_argument unless `letters` is a non-empty ascent sequence.
  explicit AscentSequence(std::vector<int> letters);

  static bool is_valid(std::span<const int> letters);

  std::span<const int> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  std::string to_string() const;  // "0 1 0 2"

  friend bool operator==(const AscentSequence&, const AscentSequence&) = default;
  friend auto operator<=>(const AscentSequence&, const AscentSequence&) = default;

 private:
  std::vector<int> letters_;
};

/// Subsequence of `word` order-isomorphic to `pattern`, equal letters
/// matching equal letters.
bool contains_word_pattern(std::span<const int> word, std::span<const int> pattern);

/// Strict: x_j > x_i for every j > i. Weak: x_j >= x_i.
enum class MinimaConvention { strict, weak };

std::string_view to_string(MinimaConvention c);

std::size_t rl_minima(std::span<const int> word, MinimaConvention convention);
std::size_t zeros(const AscentSequence& a);

/// Lazy lexicographic view of the ascent sequences of length n avoiding
/// `pattern`. Prefixes containing the pattern are pruned.
class AscentSequenceRange {
 public:
  AscentSequenceRange(std::size_t n, std::vector<int> pattern);

  class iterator {
   public:
    using value_type = AscentSequence;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    AscentSequence operator*() const { return AscentSequence(word_); }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class AscentSequenceRange;
    iterator(std::size_t n, const std::vector<int>* pattern);
    bool extend_from();
    bool prefix_ok(std::size_t len) const;
    bool advance();

    std::size_t n_ = 0;
    const std::vector<int>* pattern_ = nullptr;
    std::vector<int> word_;
    std::vector<int> ascents_;  // ascents_[i] = asc(x_1..x_{i+1})
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_, &pattern_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  std::size_t n_;
  std::vector<int> pattern_;
};

/// Throws std::invalid_argument if n = 0.
AscentSequenceRange ascent_sequences_avoiding(std::size_t n, std::vector<int> pattern);

/// (231, {1}, {1}): the 2 and 3 adjacent in position, the 1 and 2 in value.
const BivincularPattern& fishburn_pattern();
bool is_fishburn(const Permutation& p);

/// Lazy view of F_n(classical).
inline auto fishburn_avoiding(std::size_t n, Permutation classical) {
  return all_permutations(n) |
         std::views::filter([classical = std::move(classical)](const Permutation& p) {
           return is_fishburn(p) && !contains(p, classical);
         });
}

std::vector<Permutation> collect_fishburn_avoiding(std::size_t n, const Permutation& classical,
                                                   Parallelism par = {});

enum class Family { sort312, fishburn3412, ascent201 };

std::string_view to_string(Family f);

struct StatPair {
  std::size_t first = 0;
  std::size_t second = 0;

  friend bool operator==(const StatPair&, const StatPair&) = default;
  friend auto operator<=>(const StatPair&, const StatPair&) = default;
};

struct JointDistribution {
  Family family = Family::sort312;
  std::size_t n = 0;
  std::map<StatPair, Count> counts;

  Count total() const;
};

struct ExploreOptions {
  MinimaConvention ascent_minima = MinimaConvention::strict;
  Parallelism par;
};

JointDistribution joint_distribution(Family family, std::size_t n, const ExploreOptions& opt = {});

struct DistributionComparison {
  bool equal = true;
  std::optional<StatPair> first_mismatch;  // smallest pair whose counts differ
  Count left, right;                       // counts at first_mismatch
};

DistributionComparison compare(const JointDistribution& a, const JointDistribution& b);

/// Per n: three "pair → count" blocks and an EQUIDISTRIBUTED line.
std::string render_exploration(std::size_t max_n, const ExploreOptions& opt = {});

/// Cardinality chain up to `max_card_n` (hard), joint distributions up to
/// `max_joint_n` (FINDING on mismatch).
VerificationReport verify_conjectures(std::size_t max_card_n, std::size_t max_joint_n,
                                      const ExploreOptions& opt = {});

}  // namespace sigstack
