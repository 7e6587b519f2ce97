#pragma once

// Published enumerative data the verifier compares against. Sequences start
// at n = 1.

#include <cstdint>
#include <string_view>
#include <vector>

namespace sigstack::published {

struct SequenceData {
  std::string_view sigma;
  std::vector<std::uint64_t> values;
};

/// |Sort_n(sigma)| for the three open length-3 cases, n = 1..10.
inline const std::vector<SequenceData>& sortable_counts() {
  static const std::vector<SequenceData> data{
      {"213", {1, 2, 5, 16, 62, 273, 1307, 6626, 35010, 190862}},
      {"231", {1, 2, 6, 23, 102, 496, 2569, 13934, 78295, 452439}},
      {"312", {1, 2, 5, 15, 52, 201, 843, 3764, 17659, 86245}},
  };
  return data;
}

/// |Sorted_n(sigma)| for the non-effective sigma of length 3 and 4, n = 1..9.
/// The row for 21 is only given as OEIS A027432, without terms.
inline const std::vector<SequenceData>& sorted_counts() {
  static const std::vector<SequenceData> data{
      {"213", {1, 2, 4, 9, 22, 58, 161, 466, 1390}},
      {"312", {1, 2, 4, 8, 17, 40, 104, 291, 855}},
      {"2134", {1, 2, 5, 13, 34, 91, 252, 724, 2150}},
      {"2143", {1, 2, 5, 13, 35, 97, 277, 813, 2448}},
      {"3124", {1, 2, 5, 13, 34, 90, 244, 683, 1979}},
      {"4123", {1, 2, 5, 13, 33, 82, 203, 510, 1321}},
      {"4132", {1, 2, 5, 13, 34, 89, 234, 622, 1684}},
  };
  return data;
}

/// Effective permutations of length 2, 3 and 4.
inline const std::vector<std::string_view>& effective_permutations() {
  static const std::vector<std::string_view> data{
      "12",   "123",  "132",  "231",  "321",  "1234", "1243", "1324", "1342", "1423",
      "1432", "2314", "2341", "2413", "2431", "3142", "3214", "3241", "3412", "3421",
      "4213", "4231", "4312", "4321"};
  return data;
}

/// Rows of the classification table for lengths 3 and 4, top to bottom.
struct ClassificationGolden {
  int row;  // 1..6, same order as HypothesisLabel
  bool is_class;
  bool effective;
  bool sort_inside_xi;
  std::vector<std::string_view> members;
};

inline const std::vector<ClassificationGolden>& classification_table() {
  static const std::vector<ClassificationGolden> data{
      {1, true, true, true, {"1342", "2341", "2431", "3142", "3241", "4231"}},
      {2, true, true, true, {"321", "3214", "4213", "4312", "4321"}},
      {3, false, true, true, {"123", "132", "1234", "1243", "1324", "1423", "1432"}},
      {4, false, true, true, {"2314", "2413"}},
      {5, false, true, false, {"231", "3412", "3421"}},
      {6, false, false, true, {"213", "312", "2134", "2143", "3124", "4123", "4132"}},
  };
  return data;
}

/// Permutations starting with 1, other than the identity, that 3421 sorts.
inline const std::vector<std::string_view>& sortable_by_3421_starting_with_1() {
  static const std::vector<std::string_view> data{"12354", "12453", "12534", "12543"};
  return data;
}

}  // namespace sigstack::published
