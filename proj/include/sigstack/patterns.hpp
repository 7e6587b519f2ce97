#pragma once

/// \file
/// Bivincular patterns and the pattern xi = (132, {0,2}, {}): an occurrence of
/// 132 that starts at the first position and whose last two entries are
/// adjacent. Includes the first-element decomposition that characterizes
/// xi-avoiders and both routes for counting them.

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sigstack/count.hpp"
#include "sigstack/permutation.hpp"

namespace sigstack {

/// A classical pattern of length k plus adjacency constraints.
///
/// x in `adjacent_positions()` forces the entries playing pattern positions x
/// and x+1 to sit next to each other in the host; y in `adjacent_values()`
/// forces the y-th and (y+1)-th smallest entries of the occurrence to be
/// consecutive integers. Index 0 and k refer to the host's boundaries, so
/// 0 pins the occurrence to the first position (smallest value 1) and k pins
/// it to the last position (largest value n).
class BivincularPattern {
 public:
  /// Throws std::invalid_argument if a constraint index falls outside 0..k.
  BivincularPattern(Permutation pattern, std::set<int> adjacent_positions,
                    std::set<int> adjacent_values);

  const Permutation& pattern() const noexcept { return pattern_; }
  const std::set<int>& adjacent_positions() const noexcept { return positions_; }
  const std::set<int>& adjacent_values() const noexcept { return values_; }
  std::size_t size() const noexcept { return pattern_.size(); }

  /// "pattern|X|Y", e.g. "132|0,2|".
  std::string to_string() const;

  friend bool operator==(const BivincularPattern&, const BivincularPattern&) = default;

 private:
  Permutation pattern_;
  std::set<int> positions_;
  std::set<int> values_;
};

/// Parses "pattern|X|Y" where X and Y are comma-separated non-negative
/// integers, possibly empty. Throws ParseError.
BivincularPattern parse_bivincular(std::string_view text);

bool contains_bivincular(const Permutation& host, const BivincularPattern& bp);

/// Mirror image of the pattern: reversed pattern, positions x -> k - x,
/// values untouched. contains_bivincular(p, reverse_bivincular(bp)) equals
/// contains_bivincular(reverse(p), bp).
BivincularPattern reverse_bivincular(const BivincularPattern& bp);

/// (132, {0,2}, {}).
const BivincularPattern& xi();

/// Direct O(n) scan: some adjacent descent pi_j > pi_{j+1} sits above pi_1.
bool contains_xi(const Permutation& p);

struct FirstElementDecomposition {
  std::size_t t = 0;                        // p_1 = t + 1
  std::vector<std::vector<int>> blocks;     // B_0 .. B_t
  std::vector<int> small_entries;           // b_1 .. b_t in host order
  std::vector<std::size_t> small_positions; // 1-based positions of b_1 .. b_t

  /// Rebuilds p_1 B_0 b_1 B_1 ... b_t B_t.
  Permutation reassemble() const;
};

/// Throws std::invalid_argument on the empty permutation.
FirstElementDecomposition first_element_decomposition(const Permutation& p);

/// True iff every block of the first-element decomposition is increasing
/// (true for the empty permutation).
bool avoids_xi_via_blocks(const Permutation& p);

/// Sum over t = 0..n-1 of t! (t+1)^(n-t-1).
Count count_xi_avoiders_formula(std::size_t n);

/// Exhaustive count of xi-avoiders in S_n.
Count count_xi_avoiders_brute(std::size_t n);

}  // namespace sigstack
