#include "sigstack/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace sigstack {

namespace {

std::string join(const std::set<int>& s) {
  std::string out;
  for (int x : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::set<int> parse_index_list(std::string_view field) {
  std::set<int> out;
  std::size_t i = 0;
  while (i < field.size()) {
    std::size_t j = field.find(',', i);
    if (j == std::string_view::npos) j = field.size();
    auto token = field.substr(i, j - i);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int v = -1;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || v < 0)
      throw ParseError("invalid adjacency index '" + std::string(token) + "'");
    out.insert(v);
    i = j + 1;
    if (j + 1 == field.size()) throw ParseError("trailing comma in adjacency list");
  }
  return out;
}

class BivincularMatcher {
 public:
  BivincularMatcher(const Permutation& host, const BivincularPattern& bp)
      : host_(host.values()), bp_(bp), k_(bp.size()), n_(host.size()), slots_(k_) {
    by_rank_.resize(k_);
    for (std::size_t m = 0; m < k_; ++m) by_rank_[bp.pattern()[m] - 1] = m;
    const auto& x = bp.adjacent_positions();
    pin_first_ = x.contains(0);
    pin_last_ = x.contains(static_cast<int>(k_));
    glued_.assign(k_, false);
    for (int g : x)
      if (g >= 1 && static_cast<std::size_t>(g) < k_) glued_[g] = true;  // entries g-1, g adjacent
  }

  bool run() {
    if (k_ == 0) return values_ok();
    if (k_ > n_) return false;
    return place(0);
  }

 private:
  bool place(std::size_t m) {
    std::size_t lo = m == 0 ? 0 : slots_[m - 1] + 1;
    std::size_t hi = n_ - (k_ - m);  // leave room for the rest
    if (m == 0 && pin_first_) hi = std::min(hi, lo);
    if (m > 0 && glued_[m]) hi = std::min(hi, lo);
    if (m + 1 == k_ && pin_last_) lo = std::max(lo, n_ - 1);
    for (std::size_t p = lo; p <= hi && p < n_; ++p) {
      if (!order_ok(m, p)) continue;
      slots_[m] = p;
      if (m + 1 == k_) {
        if (values_ok()) return true;
      } else if (place(m + 1)) {
        return true;
      }
    }
    return false;
  }

  bool order_ok(std::size_t m, std::size_t p) const {
    const auto& pat = bp_.pattern();
    for (std::size_t l = 0; l < m; ++l)
      if ((pat[l] < pat[m]) != (host_[slots_[l]] < host_[p])) return false;
    return true;
  }

  // Value constraints with the conventions j_0 = 0 and j_{k+1} = n + 1.
  bool values_ok() const {
    for (int y : bp_.adjacent_values()) {
      const int below = y == 0 ? 0 : host_[slots_[by_rank_[y - 1]]];
      const int above = static_cast<std::size_t>(y) == k_ ? static_cast<int>(n_) + 1
                                                          : host_[slots_[by_rank_[y]]];
      if (above != below + 1) return false;
    }
    return true;
  }

  std::span<const int> host_;
  const BivincularPattern& bp_;
  std::size_t k_;
  std::size_t n_;
  std::vector<std::size_t> slots_;
  std::vector<std::size_t> by_rank_;
  std::vector<bool> glued_;
  bool pin_first_ = false;
  bool pin_last_ = false;
};

}  // namespace

BivincularPattern::BivincularPattern(Permutation pattern, std::set<int> adjacent_positions,
                                     std::set<int> adjacent_values)
    : pattern_(std::move(pattern)),
      positions_(std::move(adjacent_positions)),
      values_(std::move(adjacent_values)) {
  const int k = static_cast<int>(pattern_.size());
  auto in_range = [k](int x) { return x >= 0 && x <= k; };
  if (!std::all_of(positions_.begin(), positions_.end(), in_range) ||
      !std::all_of(values_.begin(), values_.end(), in_range))
    throw std::invalid_argument("adjacency index outside 0..k");
}

std::string BivincularPattern::to_string() const {
  return pattern_.compact() + "|" + join(positions_) + "|" + join(values_);
}

BivincularPattern parse_bivincular(std::string_view text) {
  const auto bar1 = text.find('|');
  const auto bar2 = bar1 == std::string_view::npos ? bar1 : text.find('|', bar1 + 1);
  if (bar2 == std::string_view::npos || text.find('|', bar2 + 1) != std::string_view::npos)
    throw ParseError("bivincular pattern must have the form pattern|X|Y");
  Permutation pattern = parse_permutation(text.substr(0, bar1));
  auto positions = parse_index_list(text.substr(bar1 + 1, bar2 - bar1 - 1));
  auto values = parse_index_list(text.substr(bar2 + 1));
  try {
    return BivincularPattern(std::move(pattern), std::move(positions), std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

bool contains_bivincular(const Permutation& host, const BivincularPattern& bp) {
  return BivincularMatcher(host, bp).run();
}

BivincularPattern reverse_bivincular(const BivincularPattern& bp) {
  const int k = static_cast<int>(bp.size());
  std::set<int> positions;
  for (int x : bp.adjacent_positions()) positions.insert(k - x);
  return BivincularPattern(reverse(bp.pattern()), std::move(positions), bp.adjacent_values());
}

const BivincularPattern& xi() {
  static const BivincularPattern pattern(Permutation{1, 3, 2}, {0, 2}, {});
  return pattern;
}

bool contains_xi(const Permutation& p) {
  for (std::size_t j = 1; j + 1 < p.size(); ++j)
    if (p[j] > p[j + 1] && p[j + 1] > p[0]) return true;
  return false;
}

Permutation FirstElementDecomposition::reassemble() const {
  std::vector<int> v;
  v.push_back(static_cast<int>(t) + 1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) v.push_back(small_entries[i - 1]);
    v.insert(v.end(), blocks[i].begin(), blocks[i].end());
  }
  return Permutation(std::move(v));
}

FirstElementDecomposition first_element_decomposition(const Permutation& p) {
  if (p.empty()) throw std::invalid_argument("first-element decomposition of the empty permutation");
  FirstElementDecomposition d;
  d.t = static_cast<std::size_t>(p[0]) - 1;
  d.blocks.resize(d.t + 1);
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (static_cast<std::size_t>(p[i]) <= d.t) {
      d.small_entries.push_back(p[i]);
      d.small_positions.push_back(i + 1);
    } else {
      d.blocks[d.small_entries.size()].push_back(p[i]);
    }
  }
  return d;
}

bool avoids_xi_via_blocks(const Permutation& p) {
  if (p.empty()) return true;
  const auto d = first_element_decomposition(p);
  return std::all_of(d.blocks.begin(), d.blocks.end(),
                     [](const auto& b) { return std::is_sorted(b.begin(), b.end()); });
}

Count count_xi_avoiders_formula(std::size_t n) {
  Count total = 0;
  for (std::size_t t = 0; t < n; ++t) {
    Count term = factorial(static_cast<unsigned>(t));
    term *= boost::multiprecision::pow(Count(t + 1), static_cast<unsigned>(n - t - 1));
    total += term;
  }
  return total;
}

Count count_xi_avoiders_brute(std::size_t n) {
  std::uint64_t count = 0;
  for (const Permutation& p : all_permutations(n))
    if (!contains_xi(p)) ++count;
  return count;
}

}  // namespace sigstack
