#pragma once

/// \file
/// Exhaustive enumeration of sigma-sortable permutations, sigma-sorted
/// permutations (the 231-avoiding outputs of the sigma-stack) and
/// sigma-fertilities, plus the closed forms for the 123-machine.
///
/// Every scan over S_n runs through `scan_by_first_entry`, so results are
/// identical for any worker count.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "sigstack/count.hpp"
#include "sigstack/parallel.hpp"
#include "sigstack/permutation.hpp"
#include "sigstack/stack_machine.hpp"

namespace sigstack {

/// Lazy, sequential view of Sort_n(sigma) in lexicographic order.
inline auto sortable_permutations(std::size_t n, Permutation sigma) {
  return all_permutations(n) |
         std::views::filter([sigma = std::move(sigma)](const Permutation& p) {
           return is_sortable(sigma, p);
         });
}

/// Sort_n(sigma) collected in lexicographic order, scanned in parallel.
std::vector<Permutation> collect_sortable(std::size_t n, const Permutation& sigma,
                                          Parallelism par = {});

Count count_sortable(std::size_t n, const Permutation& sigma, Parallelism par = {});

/// Each sigma-sorted gamma of length n with the number of sortable inputs
/// the sigma-stack maps to it.
struct SortedProfile {
  std::size_t n = 0;
  Permutation sigma;
  std::map<Permutation, Count> entries;

  Count total() const;
};

SortedProfile sorted_profile(std::size_t n, const Permutation& sigma, Parallelism par = {});

/// Number of distinct sigma-sorted permutations of length n.
Count count_sorted(std::size_t n, const Permutation& sigma, Parallelism par = {});

/// |{pi in S_n : map_sigma(pi) = gamma}| over all of S_n, n = |gamma|.
Count fertility(const Permutation& sigma, const Permutation& gamma, Parallelism par = {});

/// All of map_sigma(S_n) with preimage counts (231-containing outputs too).
std::map<Permutation, Count> image_profile(std::size_t n, const Permutation& sigma,
                                           Parallelism par = {});

/// 1 + sum_{j=1}^{n-1} (n-j) C_j.
Count count_sortable_123_formula(std::size_t n);

/// gamma = dec(i) skew (dec(j) direct dec(k)), dec(m) being m..1.
struct GammaTriple {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;

  friend bool operator==(const GammaTriple&, const GammaTriple&) = default;
};

/// Decomposes gamma in Av(123, 231) as above with j >= 1. The decreasing
/// permutation is ambiguous when k = 0; the largest i wins. Returns nullopt
/// for gamma outside Av(123, 231).
std::optional<GammaTriple> gamma_decomposition_123(const Permutation& gamma);

/// Per-gamma 123-fertility observed by brute force: 1 when k = 0, C_j when
/// k >= 1. (Summing C_j over the n - j admissible k gives the (n-j) C_j terms
/// of the closed form.)
Count fertility_123_law(const GammaTriple& t);

// Sequence tables --------------------------------------------------------

struct SequenceRow {
  std::size_t n = 0;
  Count count;

  friend bool operator==(const SequenceRow&, const SequenceRow&) = default;
};

std::string emit_csv(const std::vector<SequenceRow>& rows);   // header "n,count"
std::string emit_bfile(const std::vector<SequenceRow>& rows); // "n a(n)" per line
std::string emit_json(const std::vector<SequenceRow>& rows);  // [{"n":..,"count":..}]
std::string emit_plain(const std::vector<SequenceRow>& rows); // "a(1) a(2) ..."

std::vector<SequenceRow> parse_csv(std::string_view text);
std::vector<SequenceRow> parse_bfile(std::string_view text);
std::vector<SequenceRow> parse_json(std::string_view text);

/// Counts above 2^64 become strings; both forms are accepted when reading.
nlohmann::json count_to_json(const Count& c);
Count count_from_json(const nlohmann::json& j);

/// {"2 1 3": 2, ...}.
nlohmann::json profile_to_json(const SortedProfile& profile);
std::map<Permutation, Count> profile_entries_from_json(const nlohmann::json& j);

}  // namespace sigstack
