#include "doctest.h"

#include "oracles.hpp"
#include "sigstack/conjectures.hpp"
#include "sigstack/enumeration.hpp"

using namespace sigstack;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

std::vector<std::vector<int>> ascents_avoiding(std::size_t n, std::vector<int> pattern) {
  std::vector<std::vector<int>> out;
  for (const AscentSequence& a : ascent_sequences_avoiding(n, std::move(pattern)))
    out.emplace_back(a.letters().begin(), a.letters().end());
  return out;
}

}  // namespace

TEST_CASE("statistics") {
  CHECK(stat(P("2413"), Statistic::lr_max) == 2);
  CHECK(stat(P("12345"), Statistic::lr_max) == 5);
  CHECK(stat(P("321"), Statistic::rl_min) == 1);
  CHECK(stat(P("2413"), Statistic::rl_max) == 2);
  CHECK(stat(P("2413"), Statistic::lr_min) == 2);
  CHECK(stat(P("2413"), Statistic::rl_min) == 2);
  CHECK(stat(P("1"), Statistic::rl_min) == 1);
  for (const auto& p : all_permutations(5)) {
    CHECK(stat(p, Statistic::lr_max) == stat(reverse(p), Statistic::rl_max));
    CHECK(stat(p, Statistic::lr_min) == stat(reverse(p), Statistic::rl_min));
  }
  CHECK(to_string(Statistic::rl_max) == "rl_max");
}

TEST_CASE("ascent sequences") {
  CHECK_NOTHROW(AscentSequence({0, 1, 0, 2}));
  CHECK_THROWS_AS(AscentSequence({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(AscentSequence({1}), std::invalid_argument);
  CHECK_THROWS_AS(AscentSequence({}), std::invalid_argument);
  CHECK(AscentSequence({0, 1, 0, 2}).to_string() == "0 1 0 2");
  CHECK(zeros(AscentSequence({0, 1, 0, 2})) == 2);
  CHECK_THROWS_AS(ascent_sequences_avoiding(0, {2, 0, 1}), std::invalid_argument);

  CHECK(ascents_avoiding(1, {2, 0, 1}) == std::vector<std::vector<int>>{{0}});
  CHECK(ascents_avoiding(3, {2, 0, 1}).size() == 5);
  CHECK(ascents_avoiding(6, {2, 0, 1}).size() == 201);
  // Every word contains the empty pattern.
  CHECK(ascents_avoiding(3, {}).empty());
  // Unrestricted counts are the Fishburn numbers.
  const std::vector<std::size_t> fishburn{1, 2, 5, 15, 53, 217, 1014};
  for (int n = 1; n <= 7; ++n) {
    const auto all = oracle::ascent_sequences(n);
    CHECK(all.size() == fishburn[static_cast<std::size_t>(n - 1)]);
    for (const std::vector<int>& pattern : {std::vector<int>{2, 0, 1}, std::vector<int>{1, 0, 1}, std::vector<int>{0, 1}}) {
      std::vector<std::vector<int>> expected;
      for (const auto& s : all)
        if (!oracle::contains(s, pattern)) expected.push_back(s);
      CHECK(ascents_avoiding(static_cast<std::size_t>(n), pattern) == expected);
    }
  }
}

TEST_CASE("word patterns respect equal letters") {
  CHECK(contains_word_pattern(std::vector<int>{0, 1, 0}, std::vector<int>{0, 1, 0}));
  CHECK_FALSE(contains_word_pattern(std::vector<int>{0, 1, 2}, std::vector<int>{0, 1, 0}));
  CHECK(contains_word_pattern(std::vector<int>{0, 2, 1, 0, 1}, std::vector<int>{2, 0, 1}));
  CHECK_FALSE(contains_word_pattern(std::vector<int>{0, 1, 1, 0}, std::vector<int>{2, 0, 1}));
  CHECK(contains_word_pattern(std::vector<int>{0}, std::vector<int>{}));
}

TEST_CASE("right-to-left minima conventions") {
  const std::vector<int> w{0, 1, 0, 1};
  CHECK(rl_minima(w, MinimaConvention::strict) == 2);  // last 1 and the second 0
  CHECK(rl_minima(w, MinimaConvention::weak) == 3);
  CHECK(to_string(MinimaConvention::weak) == "weak");
}

TEST_CASE("fishburn permutations") {
  CHECK(fishburn_pattern().to_string() == "231|1|1");
  const std::vector<std::size_t> fishburn{1, 2, 5, 15, 53, 217};
  for (std::size_t n = 1; n <= fishburn.size(); ++n) {
    std::size_t count = 0;
    for (const auto& p : all_permutations(n))
      if (is_fishburn(p)) ++count;
    CHECK(count == fishburn[n - 1]);
  }
  std::vector<Permutation> one;
  for (const auto& p : fishburn_avoiding(1, P("3412"))) one.push_back(p);
  CHECK(one == std::vector<Permutation>{P("1")});
  CHECK(collect_fishburn_avoiding(3, P("3412")).size() == 5);
  CHECK(collect_fishburn_avoiding(6, P("3412")).size() == 201);
  std::vector<Permutation> lazy;
  for (const auto& p : fishburn_avoiding(6, P("3412"))) lazy.push_back(p);
  CHECK(lazy == collect_fishburn_avoiding(6, P("3412"), Parallelism{3}));
  // The adjacency on the 3 and the 1 instead collapses F(3412) to Catalan.
  const BivincularPattern other(P("231"), {2}, {1});
  std::size_t collapsed = 0;
  for (const auto& p : all_permutations(6))
    if (!contains_bivincular(p, other) && !contains(p, P("3412"))) ++collapsed;
  CHECK(collapsed == 132);
}

TEST_CASE("cardinality chain") {
  const std::vector<int> table{1, 2, 5, 15, 52, 201, 843, 3764};
  for (std::size_t n = 1; n <= table.size(); ++n) {
    CHECK(count_sortable(n, P("312")) == table[n - 1]);
    CHECK(joint_distribution(Family::fishburn3412, n).total() == table[n - 1]);
    CHECK(joint_distribution(Family::ascent201, n).total() == table[n - 1]);
    CHECK(joint_distribution(Family::sort312, n).total() == table[n - 1]);
  }
}

TEST_CASE("joint distributions") {
  CHECK(joint_distribution(Family::sort312, 3).total() == 5);
  CHECK(joint_distribution(Family::ascent201, 3).total() == 5);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto a = joint_distribution(Family::sort312, n);
    const auto b = joint_distribution(Family::fishburn3412, n);
    const auto c = joint_distribution(Family::ascent201, n);
    CHECK(compare(a, b).equal);
    CHECK(compare(b, c).equal);
    CHECK(joint_distribution(Family::sort312, n, {MinimaConvention::strict, Parallelism{3}}).counts == a.counts);
  }
  const auto weak = joint_distribution(Family::ascent201, 3, {MinimaConvention::weak, {}});
  const auto cmp = compare(joint_distribution(Family::sort312, 3), weak);
  CHECK_FALSE(cmp.equal);
  REQUIRE(cmp.first_mismatch.has_value());
  CHECK(cmp.left != cmp.right);
}

TEST_CASE("exploration report") {
  const std::string text = render_exploration(4);
  CHECK(text.find("# ascent sequence rl_min: strict") != std::string::npos);
  CHECK(text.find("matching for n <= 4: strict\n") != std::string::npos);
  CHECK(text.find("n = 4\n") != std::string::npos);
  CHECK(text.find("  (1, 1) → 1\n") != std::string::npos);
  std::size_t yes = 0;
  for (std::size_t pos = text.find("EQUIDISTRIBUTED: yes"); pos != std::string::npos;
       pos = text.find("EQUIDISTRIBUTED: yes", pos + 1))
    ++yes;
  CHECK(yes == 4);
  const std::string weak = render_exploration(3, {MinimaConvention::weak, {}});
  CHECK(weak.find("EQUIDISTRIBUTED: no (first mismatch: ") != std::string::npos);
}

TEST_CASE("conjecture verification") {
  const auto report = verify_conjectures(8, 7);
  CHECK(report.all_passed());
  CHECK(report.count(Verdict::finding) == 1);
  const auto weak = verify_conjectures(5, 5, {MinimaConvention::weak, {}});
  CHECK(weak.all_passed());
  CHECK(weak.count(Verdict::finding) > 1);
}
