#include "doctest.h"

#include <set>

#include "sigstack/classification.hpp"
#include "sigstack/enumeration.hpp"
#include "sigstack/patterns.hpp"
#include "sigstack/published.hpp"

using namespace sigstack;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

std::vector<Permutation> collect(auto&& range) {
  std::vector<Permutation> out;
  for (const auto& p : range) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("sort_is_class") {
  const auto v321 = sort_is_class(P("321"));
  CHECK(v321.is_class);
  CHECK(v321.basis == std::vector<Permutation>{P("132"), P("123")});
  const auto v1342 = sort_is_class(P("1342"));
  CHECK(v1342.is_class);
  CHECK(v1342.basis == std::vector<Permutation>{P("132")});
  const auto v231 = sort_is_class(P("231"));
  CHECK_FALSE(v231.is_class);
  CHECK_FALSE(v231.basis.has_value());
  CHECK_THROWS_AS(sort_is_class(P("21")), std::invalid_argument);
}

TEST_CASE("class basis matches enumeration") {
  for (std::size_t k = 3; k <= 4; ++k)
    for (const auto& sigma : all_permutations(k)) {
      const auto v = sort_is_class(sigma);
      CHECK(v.is_class == contains(hat(sigma), P("231")));
      CHECK(v.basis.has_value() == v.is_class);
      if (!v.is_class) continue;
      for (std::size_t n = 1; n <= 7; ++n) CHECK(collect_sortable(n, sigma) == collect(avoiders(n, *v.basis)));
    }
}

TEST_CASE("is_effective") {
  CHECK_FALSE(is_effective(P("21")));
  CHECK(is_effective(P("12")));
  CHECK(is_effective(P("231")));
  CHECK_FALSE(is_effective(P("2134")));
  CHECK_THROWS_AS(is_effective(P("1")), std::invalid_argument);
  for (std::size_t m = 2; m <= 5; ++m) {
    std::size_t non_effective = 0;
    for (const auto& s : all_permutations(m))
      if (!is_effective(s)) ++non_effective;
    CHECK(Count(non_effective) == catalan(static_cast<unsigned>(m - 1)));
  }
  std::set<std::string> listed(published::effective_permutations().begin(), published::effective_permutations().end());
  for (std::size_t m = 2; m <= 4; ++m)
    for (const auto& s : all_permutations(m)) CHECK(is_effective(s) == (listed.count(s.compact()) == 1));
}

TEST_CASE("effectiveness against sorted permutations") {
  for (std::size_t k = 2; k <= 4; ++k)
    for (const auto& sigma : all_permutations(k)) {
      bool all_avoid = true;
      for (std::size_t n = 1; n <= 7; ++n) {
        const auto prof = sorted_profile(n, sigma);
        for (const auto& [gamma, c] : prof.entries) all_avoid = all_avoid && !contains(gamma, sigma);
        if (is_effective(sigma)) {
          std::vector<Permutation> keys;
          for (const auto& [gamma, c] : prof.entries) keys.push_back(gamma);
          CHECK(keys == collect(avoiders(n, {P("231"), sigma})));
        }
      }
      CHECK(is_effective(sigma) == all_avoid);
    }
}

TEST_CASE("skew_12_decomposition") {
  CHECK(skew_12_decomposition(P("231")) == P("1"));
  CHECK(skew_12_decomposition(P("3421")) == P("21"));
  CHECK(skew_12_decomposition(P("3412")) == P("12"));
  CHECK_FALSE(skew_12_decomposition(P("321")).has_value());
  CHECK(skew_12_decomposition(P("12")) == Permutation());
  for (std::size_t k = 3; k <= 5; ++k)
    for (const auto& s : all_permutations(k))
      if (auto beta = skew_12_decomposition(s)) CHECK(skew_sum(P("12"), *beta) == s);
}

TEST_CASE("sort_subset_xi") {
  CHECK_FALSE(sort_subset_xi(P("231")));
  CHECK_FALSE(sort_subset_xi(P("3412")));
  CHECK_FALSE(sort_subset_xi(P("3421")));
  CHECK(sort_subset_xi(P("123")));
  CHECK(sort_subset_xi(P("132")));
  CHECK_THROWS_AS(sort_subset_xi(P("21")), std::invalid_argument);
  for (std::size_t k = 3; k <= 5; ++k)
    for (const auto& s : all_permutations(k)) CHECK(sort_subset_xi(s) == !escapes_xi_by_hat(s));
  for (std::size_t k = 3; k <= 4; ++k)
    for (const auto& sigma : all_permutations(k)) {
      bool inside = true;
      for (std::size_t n = 1; n <= 7 && inside; ++n)
        for (const auto& pi : collect_sortable(n, sigma)) inside = inside && !contains_xi(pi);
      CHECK(sort_subset_xi(sigma) == inside);
    }
}

TEST_CASE("classification rows") {
  const auto r321 = classification_row(P("321"));
  CHECK(r321.is_class);
  CHECK(r321.is_effective);
  CHECK(r321.sort_inside_xi);
  const auto r2314 = classification_row(P("2314"));
  CHECK_FALSE(r2314.is_class);
  CHECK(r2314.is_effective);
  CHECK(r2314.sort_inside_xi);
  CHECK(r2314.label == HypothesisLabel::hat_avoids_231_hat1_not_1_sigma_avoids_xiR_contains_231);
  const auto r312 = classification_row(P("312"));
  CHECK_FALSE(r312.is_class);
  CHECK_FALSE(r312.is_effective);
  CHECK(r312.sort_inside_xi);
  CHECK(r312.label == HypothesisLabel::hat_avoids_231_hat1_is_1);

  for (const auto& row : published::classification_table())
    for (auto member : row.members) {
      const auto r = classification_row(parse_permutation(member));
      CHECK(static_cast<int>(r.label) == row.row);
      CHECK(r.is_class == row.is_class);
      CHECK(r.is_effective == row.effective);
      CHECK(r.sort_inside_xi == row.sort_inside_xi);
    }
  CHECK(classify_all(3).size() == 6);
  CHECK(classify_all(4).size() == 24);
  // The six rows partition S_5 as well and agree with the predicates.
  for (const auto& r : classify_all(5)) {
    CHECK(r.class_basis.has_value() == r.is_class);
    const int label = static_cast<int>(r.label);
    CHECK(r.is_class == (label <= 2));
    CHECK(r.is_effective == (label != 6));
    CHECK(r.sort_inside_xi == (label != 5));
  }
}

TEST_CASE("rendering") {
  const auto rows = classify_all(3);
  const std::string ascii = render_classification(rows, false);
  CHECK(ascii.find("231    N    Y    N") != std::string::npos);
  CHECK(ascii.find("✓") == std::string::npos);
  const std::string fancy = render_classification(rows, true);
  CHECK(fancy.find("✓") != std::string::npos);
  CHECK(std::count(ascii.begin(), ascii.end(), '\n') == 7);
  const auto j = classification_to_json(rows);
  REQUIRE(j.size() == 6);
  CHECK(j[3]["sigma"] == "2 3 1");
  CHECK(j[3]["sort_inside_xi"] == false);
  CHECK(j[5]["basis"] == nlohmann::json::array({"1 3 2", "1 2 3"}));
}

TEST_CASE("report") {
  VerificationReport r;
  r.lines.push_back({"b", "21", 3, Verdict::pass, ""});
  r.lines.push_back({"a", "231", 2, Verdict::fail, "why"});
  r.lines.push_back({"a", "21", 5, Verdict::finding, "note"});
  r.lines.push_back({"a", "21", 4, Verdict::pass, ""});
  r.sort();
  CHECK(r.lines[0].n == 4);
  CHECK(r.lines[1].n == 5);
  CHECK(r.lines[2].sigma == "231");
  CHECK(r.lines[3].id == "b");
  CHECK_FALSE(r.all_passed());
  CHECK(r.count(Verdict::pass) == 2);
  const std::string text = r.render();
  CHECK(text.rfind("a | 21 | 4 | PASS\na | 21 | 5 | FINDING\n    note\na | 231 | 2 | FAIL\n    why\n", 0) == 0);
}

TEST_CASE("verification suites pass") {
  const auto thm = verify_theorems(3, 7);
  CHECK(thm.all_passed());
  CHECK(thm.count(Verdict::pass) > 50);
  const auto tab = verify_tables(8);
  CHECK(tab.all_passed());
  const auto len2 = verify_length_two(8);
  CHECK(len2.all_passed());
  REQUIRE(len2.lines.size() == 3);
  CHECK(len2.lines[0].detail.find("Catalan") != std::string::npos);
  CHECK(len2.lines[1].detail.find("West") != std::string::npos);
}

TEST_CASE("West two-stack counts") {
  const std::vector<int> expected{1, 2, 6, 22, 91, 408, 1938, 9614};
  for (std::size_t n = 1; n <= expected.size(); ++n) CHECK(west_two_stack_sortable(n) == expected[n - 1]);
}
