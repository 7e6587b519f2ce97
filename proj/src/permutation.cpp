#include "sigstack/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>

namespace sigstack {

namespace {

bool is_bijection(const std::vector<int>& values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > values.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// Whether host[p] can play pattern entry m given the entries already placed
// at slots[0..m).
bool fits(std::span<const int> host, const Permutation& pattern,
          std::span<const std::size_t> slots, std::size_t m, std::size_t p) {
  const int v = host[p];
  const int target = pattern[m];
  for (std::size_t l = 0; l < m; ++l) {
    if ((pattern[l] < target) != (host[slots[l]] < v)) return false;
  }
  return true;
}

// Depth-first search for the next complete slot assignment, starting with
// pattern entry m at slots[m]. Returns false when the search space is spent.
bool search(std::span<const int> host, const Permutation& pattern,
            std::vector<std::size_t>& slots, std::size_t m) {
  const std::size_t k = pattern.size();
  const std::size_t n = host.size();
  for (;;) {
    bool placed = false;
    while (slots[m] + (k - m) <= n) {
      if (fits(host, pattern, slots, m, slots[m])) {
        placed = true;
        break;
      }
      ++slots[m];
    }
    if (placed) {
      if (m + 1 == k) return true;
      slots[m + 1] = slots[m] + 1;
      ++m;
    } else {
      if (m == 0) return false;
      --m;
      ++slots[m];
    }
  }
}

bool contains_length2(std::span<const int> host, bool ascending) {
  if (host.size() < 2) return false;
  int lo = host[0];
  int hi = host[0];
  for (std::size_t i = 1; i < host.size(); ++i) {
    if (ascending ? lo < host[i] : hi > host[i]) return true;
    lo = std::min(lo, host[i]);
    hi = std::max(hi, host[i]);
  }
  return false;
}

// O(n^2) scan for patterns of length three.
bool contains_length3(std::span<const int> host, int a, int b, int c) {
  const std::size_t n = host.size();
  if (n < 3) return false;
  if (b != 2) {
    // Middle entry is extremal: fix the outer pair, track the extreme between.
    for (std::size_t i = 0; i + 2 < n; ++i) {
      int lo = host[i + 1];
      int hi = host[i + 1];
      for (std::size_t k = i + 2; k < n; ++k) {
        if ((a < c) == (host[i] < host[k])) {
          if (b == 3 ? hi > std::max(host[i], host[k]) : lo < std::min(host[i], host[k]))
            return true;
        }
        lo = std::min(lo, host[k]);
        hi = std::max(hi, host[k]);
      }
    }
    return false;
  }
  // 123 or 321: first entry is extremal, so a prefix extreme suffices.
  const bool increasing = a == 1;
  int lo = host[0];
  int hi = host[0];
  for (std::size_t j = 1; j + 1 < n; ++j) {
    const bool prefix_ok = increasing ? lo < host[j] : hi > host[j];
    if (prefix_ok) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (increasing ? host[j] < host[k] : host[j] > host[k]) return true;
      }
    }
    lo = std::min(lo, host[j]);
    hi = std::max(hi, host[j]);
  }
  return false;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  if (!is_bijection(values_))
    throw std::invalid_argument("not a permutation of 1..n");
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::unchecked(std::vector<int> values) {
  Permutation p;
  p.values_ = std::move(values);
  return p;
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return unchecked(std::move(v));
}

Permutation Permutation::decreasing(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(n - i);
  return unchecked(std::move(v));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::string Permutation::compact() const {
  if (values_.size() > 9) return to_string();
  std::string out;
  for (int v : values_) out += static_cast<char>('0' + v);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

Permutation parse_permutation(std::string_view text) {
  auto is_sep = [](char ch) { return ch == ',' || std::isspace(static_cast<unsigned char>(ch)); };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return {};

  std::vector<int> values;
  if (std::any_of(text.begin(), text.end(), is_sep)) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_sep(text[i])) ++i;
      std::size_t j = i;
      while (j < text.size() && !is_sep(text[j])) ++j;
      if (j == i) break;
      int v = 0;
      const auto token = text.substr(i, j - i);
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("invalid permutation entry '" + std::string(token) + "'");
      values.push_back(v);
      i = j;
    }
  } else {
    if (text.size() > 9)
      throw ParseError("compact permutation form is limited to n <= 9; separate entries");
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw ParseError("invalid character '" + std::string(1, ch) + "' in permutation");
      values.push_back(ch - '0');
    }
  }
  if (!is_bijection(values))
    throw ParseError("'" + std::string(text) + "' is not a permutation of 1..n");
  return Permutation::unchecked(std::move(values));
}

Permutation standardize(std::span<const int> word) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), word[i]) - sorted.begin()) + 1;
  return Permutation::unchecked(std::move(out));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.begin(), p.end());
  std::reverse(v.begin(), v.end());
  return Permutation::unchecked(std::move(v));
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> v(a.begin(), a.end());
  const int shift = static_cast<int>(a.size());
  for (int x : b) v.push_back(x + shift);
  return Permutation::unchecked(std::move(v));
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> v;
  v.reserve(a.size() + b.size());
  const int shift = static_cast<int>(b.size());
  for (int x : a) v.push_back(x + shift);
  v.insert(v.end(), b.begin(), b.end());
  return Permutation::unchecked(std::move(v));
}

Permutation hat(const Permutation& s) {
  if (s.size() < 2) throw std::invalid_argument("hat requires a permutation of length >= 2");
  std::vector<int> v(s.begin(), s.end());
  std::swap(v[0], v[1]);
  return Permutation::unchecked(std::move(v));
}

bool contains_backtracking(std::span<const int> host, const Permutation& pattern) {
  const std::size_t k = pattern.size();
  if (k == 0) return true;
  if (k > host.size()) return false;
  std::vector<std::size_t> slots(k, 0);
  return search(host, pattern, slots, 0);
}

bool contains(std::span<const int> host, const Permutation& pattern) {
  switch (pattern.size()) {
    case 0:
      return true;
    case 1:
      return !host.empty();
    case 2:
      return contains_length2(host, pattern[0] < pattern[1]);
    case 3:
      return contains_length3(host, pattern[0], pattern[1], pattern[2]);
    default:
      return contains_backtracking(host, pattern);
  }
}

bool avoids_all(std::span<const int> host, std::span<const Permutation> basis) {
  return std::none_of(basis.begin(), basis.end(),
                      [&](const Permutation& b) { return contains(host, b); });
}

OccurrenceRange::iterator::iterator(const OccurrenceRange* range) : range_(range) {
  advance(false);
}

OccurrenceRange::iterator& OccurrenceRange::iterator::operator++() {
  advance(true);
  return *this;
}

void OccurrenceRange::iterator::advance(bool resume) {
  const auto host = range_->host_.values();
  const Permutation& pattern = range_->pattern_;
  const std::size_t k = pattern.size();
  if (k == 0) {
    // The empty pattern has exactly one (empty) occurrence.
    done_ = resume;
    current_.indices.clear();
    return;
  }
  if (!resume) {
    if (k > host.size()) {
      done_ = true;
      return;
    }
    slots_.assign(k, 0);
  } else {
    ++slots_[k - 1];
  }
  if (!search(host, pattern, slots_, resume ? k - 1 : 0)) {
    done_ = true;
    return;
  }
  done_ = false;
  current_.indices.resize(k);
  for (std::size_t m = 0; m < k; ++m) current_.indices[m] = slots_[m] + 1;
}

OccurrenceRange occurrences(const Permutation& host, const Permutation& pattern) {
  return OccurrenceRange(host, pattern);
}

bool next_tail_permutation(std::vector<int>& word, std::size_t fixed) {
  if (fixed >= word.size()) return false;
  return std::next_permutation(word.begin() + static_cast<std::ptrdiff_t>(fixed), word.end());
}

PermutationRange::iterator::iterator(std::size_t n, int first) {
  if (first != 0 && (first < 1 || static_cast<std::size_t>(first) > n)) return;  // empty range
  word_.resize(n);
  std::iota(word_.begin(), word_.end(), 1);
  if (first != 0) {
    std::rotate(word_.begin(), word_.begin() + (first - 1), word_.begin() + first);
    fixed_ = 1;
  }
  current_ = Permutation::unchecked(word_);
  done_ = false;
}

PermutationRange::iterator& PermutationRange::iterator::operator++() {
  if (!next_tail_permutation(word_, fixed_)) {
    done_ = true;
  } else {
    current_ = Permutation::unchecked(word_);
  }
  return *this;
}

}  // namespace sigstack
