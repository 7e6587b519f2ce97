#include "doctest.h"

#include <limits>

#include "oracles.hpp"
#include "sigstack/patterns.hpp"

using namespace sigstack;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

std::vector<std::set<int>> index_sets(int k) {
  std::vector<std::set<int>> out;
  for (int mask = 0; mask < (1 << (k + 1)); ++mask) {
    std::set<int> s;
    for (int i = 0; i <= k; ++i)
      if (mask & (1 << i)) s.insert(i);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("constructor checks constraint indices") {
  CHECK_NOTHROW(BivincularPattern(P("132"), {0, 3}, {0, 3}));
  CHECK_THROWS_AS(BivincularPattern(P("132"), {4}, {}), std::invalid_argument);
  CHECK_THROWS_AS(BivincularPattern(P("132"), {}, {-1}), std::invalid_argument);
}

TEST_CASE("text form") {
  CHECK(xi().to_string() == "132|0,2|");
  CHECK(parse_bivincular("132|0,2|") == xi());
  CHECK(parse_bivincular("231|1|1") == BivincularPattern(P("231"), {1}, {1}));
  CHECK(parse_bivincular("21||") == BivincularPattern(P("21"), {}, {}));
  for (const char* bad : {"132", "132|0,2", "132|a|", "132|0,,2|", "132|0|1|2", "1a2||", "132|9|"})
    CHECK_THROWS_AS(parse_bivincular(bad), std::invalid_argument);
  const BivincularPattern bp(P("2413"), {0, 2, 4}, {1, 3});
  CHECK(parse_bivincular(bp.to_string()) == bp);
}

TEST_CASE("contains_bivincular examples") {
  CHECK(contains_bivincular(P("1432"), xi()));
  CHECK_FALSE(contains_bivincular(P("231"), xi()));
  CHECK(contains_bivincular(P("35412"), xi()));
  CHECK_FALSE(contains_bivincular(P("34152"), xi()));
}

TEST_CASE("contains_bivincular matches the definition for every constraint set") {
  for (int k = 1; k <= 3; ++k)
    for (const auto& pat : oracle::perms(k))
      for (const auto& X : index_sets(k))
        for (const auto& Y : index_sets(k)) {
          const BivincularPattern bp(Permutation(pat), X, Y);
          for (int n = 0; n <= 5; ++n)
            for (const auto& h : oracle::perms(n))
              CHECK(contains_bivincular(Permutation(h), bp) == oracle::contains_bivincular(h, pat, X, Y));
        }
}

TEST_CASE("empty constraints coincide with classical containment") {
  for (int k = 1; k <= 4; ++k)
    for (const auto& pat : oracle::perms(k)) {
      const BivincularPattern bp(Permutation(pat), {}, {});
      for (std::size_t n = 0; n <= 6; ++n)
        for (const auto& h : all_permutations(n)) CHECK(contains_bivincular(h, bp) == contains(h, bp.pattern()));
    }
}

TEST_CASE("reverse_bivincular") {
  CHECK(reverse_bivincular(xi()) == BivincularPattern(P("231"), {1, 3}, {}));
  const BivincularPattern classical(P("2413"), {}, {});
  CHECK(reverse_bivincular(classical) == BivincularPattern(P("3142"), {}, {}));
  for (int k = 1; k <= 3; ++k)
    for (const auto& pat : oracle::perms(k))
      for (const auto& X : index_sets(k))
        for (const auto& Y : {std::set<int>{}, std::set<int>{0}, std::set<int>{1}}) {
          const BivincularPattern bp(Permutation(pat), X, Y);
          CHECK(reverse_bivincular(reverse_bivincular(bp)) == bp);
          const BivincularPattern r = reverse_bivincular(bp);
          for (std::size_t n = 0; n <= 6; ++n)
            for (const auto& p : all_permutations(n))
              CHECK(contains_bivincular(p, r) == contains_bivincular(reverse(p), bp));
        }
}

TEST_CASE("contains_xi") {
  CHECK(contains_xi(P("1432")));
  CHECK_FALSE(contains_xi(P("34152")));
  CHECK(contains_xi(P("35412")));
  CHECK_FALSE(contains_xi(Permutation()));
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK_FALSE(contains_xi(Permutation::identity(n)));
    for (const auto& p : all_permutations(n)) {
      const bool has = contains_xi(p);
      CHECK(has == contains_bivincular(p, xi()));
      CHECK(avoids_xi_via_blocks(p) == !has);
      if (!contains(p, P("132"))) CHECK_FALSE(has);
      if (!has && n > 0 && p[0] == 1) CHECK(p.is_identity());
    }
  }
}

TEST_CASE("first_element_decomposition") {
  const auto d = first_element_decomposition(P("35412"));
  CHECK(d.t == 2);
  CHECK(d.blocks == std::vector<std::vector<int>>{{5, 4}, {}, {}});
  CHECK(d.small_entries == std::vector<int>{1, 2});
  CHECK(d.small_positions == std::vector<std::size_t>{4, 5});
  CHECK(d.reassemble() == P("35412"));

  const auto id = first_element_decomposition(P("12345"));
  CHECK(id.t == 0);
  CHECK(id.blocks == std::vector<std::vector<int>>{{2, 3, 4, 5}});

  const auto two = first_element_decomposition(P("21"));
  CHECK(two.t == 1);
  CHECK(two.blocks == std::vector<std::vector<int>>{{}, {}});

  CHECK_THROWS_AS(first_element_decomposition(Permutation()), std::invalid_argument);

  CHECK_FALSE(avoids_xi_via_blocks(P("35412")));
  CHECK(avoids_xi_via_blocks(P("34152")));
  CHECK(avoids_xi_via_blocks(P("123456")));

  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& p : all_permutations(n)) {
      const auto dec = first_element_decomposition(p);
      CHECK(dec.reassemble() == p);
      CHECK(dec.blocks.size() == dec.t + 1);
      std::vector<int> small = dec.small_entries;
      std::sort(small.begin(), small.end());
      for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i] == static_cast<int>(i) + 1);
      for (const auto& block : dec.blocks)
        for (int v : block) CHECK(v > static_cast<int>(dec.t) + 1);
      for (std::size_t i = 0; i < dec.small_positions.size(); ++i)
        CHECK(p[dec.small_positions[i] - 1] == dec.small_entries[i]);
    }
}

TEST_CASE("xi-avoider counts") {
  const std::vector<int> expected{1, 2, 5, 17, 75, 407, 2619};
  for (std::size_t n = 1; n <= expected.size(); ++n) CHECK(count_xi_avoiders_formula(n) == expected[n - 1]);
  for (std::size_t n = 1; n <= 9; ++n) CHECK(count_xi_avoiders_formula(n) == count_xi_avoiders_brute(n));
  // Large n stays exact.
  CHECK(count_xi_avoiders_formula(30) > Count(std::numeric_limits<std::uint64_t>::max()));
}
