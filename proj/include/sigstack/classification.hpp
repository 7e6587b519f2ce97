#pragma once

/// \file
/// Which sigma-machines are tractable. Three predicates on sigma, each
/// decided from sigma alone:
///
///  - Cls: Sort(sigma) is a permutation class iff hat(sigma) contains 231
///    (|sigma| >= 3). Then Sort(sigma) = Av(132) if sigma contains 231 and
///    Av(132, reverse(sigma)) otherwise.
///  - xi: Sort(sigma) escapes Av(xi) iff sigma = 12 skew beta with beta
///    avoiding 231, iff hat(sigma) avoids 231 and sigma contains reverse(xi)
///    (|sigma| >= 3).
///  - Eff: sigma is not effective iff hat(sigma) = 1 direct alpha with alpha
///    avoiding 231 (|sigma| >= 2).
///
/// `verify_theorems` and `verify_tables` check these, and the published
/// counts, against exhaustive enumeration.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sigstack/count.hpp"
#include "sigstack/parallel.hpp"
#include "sigstack/permutation.hpp"

namespace sigstack {

/// The six bands of the classification table, top to bottom.
enum class HypothesisLabel {
  hat_contains_231_sigma_contains_231 = 1,
  hat_contains_231_sigma_avoids_231,
  hat_avoids_231_hat1_not_1_sigma_avoids_231,
  hat_avoids_231_hat1_not_1_sigma_avoids_xiR_contains_231,
  hat_avoids_231_hat1_not_1_sigma_contains_xiR,
  hat_avoids_231_hat1_is_1,
};

std::string describe(HypothesisLabel label);

struct ClassVerdict {
  bool is_class = false;
  std::optional<std::vector<Permutation>> basis;
};

/// Throws std::invalid_argument if |sigma| < 3.
ClassVerdict sort_is_class(const Permutation& sigma);

/// Throws std::invalid_argument if |sigma| < 2.
bool is_effective(const Permutation& sigma);

/// beta with sigma = 12 skew beta, if sigma starts with n-1, n.
std::optional<Permutation> skew_12_decomposition(const Permutation& sigma);

/// True iff Sort(sigma) is contained in Av(xi). Throws std::invalid_argument
/// if |sigma| < 3.
bool sort_subset_xi(const Permutation& sigma);

/// The other characterization of the exceptions: hat(sigma) avoids 231 and
/// sigma contains reverse(xi).
bool escapes_xi_by_hat(const Permutation& sigma);

struct ClassificationRow {
  Permutation sigma;
  bool is_class = false;
  std::optional<std::vector<Permutation>> class_basis;
  bool is_effective = false;
  bool sort_inside_xi = false;
  HypothesisLabel label{};
};

/// Throws std::invalid_argument if |sigma| < 3.
ClassificationRow classification_row(const Permutation& sigma);

/// Rows for every sigma in S_length, lexicographic.
std::vector<ClassificationRow> classify_all(std::size_t length);

/// Aligned table. `unicode` selects check marks over Y/N.
std::string render_classification(const std::vector<ClassificationRow>& rows, bool unicode);
nlohmann::json classification_to_json(const std::vector<ClassificationRow>& rows);

// Verification -------------------------------------------------------------

enum class Verdict { pass, fail, finding };

struct ReportLine {
  std::string id;       // e.g. "class"
  std::string sigma;    // compact form, "-" when not applicable
  std::size_t n = 0;
  Verdict verdict = Verdict::pass;
  std::string detail;   // printed under FAIL and FINDING lines
};

struct VerificationReport {
  std::vector<ReportLine> lines;

  bool all_passed() const;
  std::size_t count(Verdict v) const;
  /// Check id, then sigma (length, then lexicographic), then n.
  void sort();
  void append(const VerificationReport& other);
  /// "id | sigma | n | PASS" per line.
  std::string render() const;
};

/// Brute-force checks of every characterization for sigma of length up to
/// `max_sigma_len` (<= 4 practical) and inputs of length up to `max_n`.
VerificationReport verify_theorems(std::size_t max_sigma_len, std::size_t max_n,
                                   Parallelism par = {});

/// Published sequence values, the effective list and the classification
/// table, for n up to `max_n`.
VerificationReport verify_tables(std::size_t max_n, Parallelism par = {});

/// Sort_n(21) and Sort_n(12) against the Catalan and West-2-stack-sortable
/// counts. Adds one line per (sigma, n) plus a consistency line per sigma.
VerificationReport verify_length_two(std::size_t max_n, Parallelism par = {});

/// 2 (3n)! / ((n+1)! (2n+1)!).
Count west_two_stack_sortable(std::size_t n);

}  // namespace sigstack
