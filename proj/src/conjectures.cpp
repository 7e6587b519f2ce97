#include "sigstack/conjectures.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "sigstack/enumeration.hpp"
#include "sigstack/published.hpp"
#include "sigstack/stack_machine.hpp"

namespace sigstack {

namespace {

int sign(int v) { return (v > 0) - (v < 0); }

// Occurrence of pattern[pos..] in word[start..], consistent with the letters
// already chosen.
bool match_word(std::span<const int> word, std::span<const int> pattern, std::vector<std::size_t>& chosen,
                std::size_t start, std::size_t pos) {
  const std::size_t k = pattern.size();
  if (pos == k) return true;
  for (std::size_t idx = start; idx + (k - pos) <= word.size(); ++idx) {
    bool ok = true;
    for (std::size_t t = 0; t < pos && ok; ++t)
      ok = sign(word[idx] - word[chosen[t]]) == sign(pattern[pos] - pattern[t]);
    if (!ok) continue;
    chosen[pos] = idx;
    if (match_word(word, pattern, chosen, idx + 1, pos + 1)) return true;
  }
  return false;
}

// Occurrence whose last letter is the last letter of `word`.
bool ends_with_occurrence(std::span<const int> word, std::span<const int> pattern) {
  const std::size_t k = pattern.size();
  if (k == 0) return true;
  if (word.size() < k) return false;
  std::vector<std::size_t> chosen(k);
  chosen[k - 1] = word.size() - 1;
  auto rec = [&](auto&& self, std::size_t start, std::size_t pos) -> bool {
    if (pos == k - 1) return true;
    for (std::size_t idx = start; idx + (k - pos) <= word.size(); ++idx) {
      bool ok = sign(word[idx] - word.back()) == sign(pattern[pos] - pattern[k - 1]);
      for (std::size_t t = 0; t < pos && ok; ++t)
        ok = sign(word[idx] - word[chosen[t]]) == sign(pattern[pos] - pattern[t]);
      if (!ok) continue;
      chosen[pos] = idx;
      if (self(self, idx + 1, pos + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

const Permutation& p312() {
  static const Permutation p{3, 1, 2};
  return p;
}

const Permutation& p3412() {
  static const Permutation p{3, 4, 1, 2};
  return p;
}

const Permutation& p231() {
  static const Permutation p{2, 3, 1};
  return p;
}

const std::vector<int>& word201() {
  static const std::vector<int> w{2, 0, 1};
  return w;
}

// Fishburn numbers, n = 1..7.
const std::vector<std::uint64_t>& fishburn_numbers() {
  static const std::vector<std::uint64_t> v{1, 2, 5, 15, 53, 217, 1014};
  return v;
}

using PairCounts = std::map<StatPair, std::uint64_t>;

JointDistribution fold(Family family, std::size_t n, const std::vector<PairCounts>& parts) {
  JointDistribution d{family, n, {}};
  for (const auto& part : parts)
    for (const auto& [pair, c] : part) d.counts[pair] += c;
  return d;
}

std::string pair_text(const StatPair& p) {
  return "(" + std::to_string(p.first) + ", " + std::to_string(p.second) + ")";
}

std::string family_heading(Family f) {
  switch (f) {
    case Family::sort312:
      return "Sort(312) (lr_max, rl_max)";
    case Family::fishburn3412:
      return "F(3412) (lr_max, lr_min)";
    case Family::ascent201:
      return "A(201) (rl_min, zeros)";
  }
  return "?";
}

struct Equidistribution {
  bool equal = true;
  std::string mismatch;  // "Sort(312) vs F(3412) at (1, 2): 2 vs 3"
};

Equidistribution check_equidistribution(const std::vector<JointDistribution>& ds) {
  for (std::size_t i = 0; i + 1 < ds.size(); ++i) {
    const auto cmp = compare(ds[i], ds[i + 1]);
    if (!cmp.equal)
      return {false, std::string(to_string(ds[i].family)) + " vs " + std::string(to_string(ds[i + 1].family)) +
                         " at " + pair_text(*cmp.first_mismatch) + ": " + cmp.left.str() + " vs " +
                         cmp.right.str()};
  }
  return {};
}

std::vector<JointDistribution> all_three(std::size_t n, const ExploreOptions& opt) {
  return {joint_distribution(Family::sort312, n, opt), joint_distribution(Family::fishburn3412, n, opt),
          joint_distribution(Family::ascent201, n, opt)};
}

// Conventions for which the ascent-sequence pairs match the other two
// families at every n <= 4.
std::vector<MinimaConvention> matching_conventions(const ExploreOptions& opt) {
  std::vector<MinimaConvention> good;
  for (MinimaConvention c : {MinimaConvention::strict, MinimaConvention::weak}) {
    ExploreOptions o = opt;
    o.ascent_minima = c;
    bool ok = true;
    for (std::size_t n = 1; n <= 4 && ok; ++n) ok = check_equidistribution(all_three(n, o)).equal;
    if (ok) good.push_back(c);
  }
  return good;
}

std::string conventions_text(const std::vector<MinimaConvention>& cs) {
  if (cs.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ", ";
    out += to_string(cs[i]);
  }
  return out;
}

}  // namespace

std::string_view to_string(Statistic s) {
  switch (s) {
    case Statistic::lr_max:
      return "lr_max";
    case Statistic::rl_max:
      return "rl_max";
    case Statistic::lr_min:
      return "lr_min";
    case Statistic::rl_min:
      return "rl_min";
  }
  return "?";
}

std::size_t stat(std::span<const int> p, Statistic which) {
  std::size_t count = 0;
  switch (which) {
    case Statistic::lr_max: {
      int best = std::numeric_limits<int>::min();
      for (int v : p)
        if (v > best) best = v, ++count;
      break;
    }
    case Statistic::lr_min: {
      int best = std::numeric_limits<int>::max();
      for (int v : p)
        if (v < best) best = v, ++count;
      break;
    }
    case Statistic::rl_max: {
      int best = std::numeric_limits<int>::min();
      for (auto it = p.rbegin(); it != p.rend(); ++it)
        if (*it > best) best = *it, ++count;
      break;
    }
    case Statistic::rl_min: {
      int best = std::numeric_limits<int>::max();
      for (auto it = p.rbegin(); it != p.rend(); ++it)
        if (*it < best) best = *it, ++count;
      break;
    }
  }
  return count;
}

// AscentSequence -------------------------------------------------------------

AscentSequence::AscentSequence(std::vector<int> letters) : letters_(std::move(letters)) {
  if (!is_valid(letters_)) throw std::invalid_argument("not an ascent sequence");
}

bool AscentSequence::is_valid(std::span<const int> letters) {
  if (letters.empty() || letters[0] != 0) return false;
  int ascents = 0;
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i] < 0 || letters[i] > ascents + 1) return false;
    if (letters[i] > letters[i - 1]) ++ascents;
  }
  return true;
}

std::string AscentSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

bool contains_word_pattern(std::span<const int> word, std::span<const int> pattern) {
  std::vector<std::size_t> chosen(pattern.size());
  return match_word(word, pattern, chosen, 0, 0);
}

std::string_view to_string(MinimaConvention c) { return c == MinimaConvention::strict ? "strict" : "weak"; }

std::size_t rl_minima(std::span<const int> word, MinimaConvention convention) {
  std::size_t count = 0;
  int best = std::numeric_limits<int>::max();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const bool is_min = convention == MinimaConvention::strict ? *it < best : *it <= best;
    if (is_min) ++count;
    best = std::min(best, *it);
  }
  return count;
}

std::size_t zeros(const AscentSequence& a) {
  return static_cast<std::size_t>(std::count(a.letters().begin(), a.letters().end(), 0));
}

AscentSequenceRange::AscentSequenceRange(std::size_t n, std::vector<int> pattern)
    : n_(n), pattern_(std::move(pattern)) {}

AscentSequenceRange::iterator::iterator(std::size_t n, const std::vector<int>* pattern)
    : n_(n), pattern_(pattern) {
  if (n == 0) return;
  word_ = {0};
  ascents_ = {0};
  done_ = !(prefix_ok(1) && extend_from()) && !advance();
}

bool AscentSequenceRange::iterator::prefix_ok(std::size_t len) const {
  return !ends_with_occurrence(std::span<const int>(word_.data(), len), *pattern_);
}

// Fills word_ up to length n with the smallest admissible letters, stopping
// at the first dead end.
bool AscentSequenceRange::iterator::extend_from() {
  while (word_.size() < n_) {
    word_.push_back(0);
    ascents_.push_back(ascents_.back());
    if (!prefix_ok(word_.size())) return false;
  }
  return true;
}

// Moves to the next admissible word in lexicographic order.
bool AscentSequenceRange::iterator::advance() {
  while (word_.size() > 1) {
    const std::size_t i = word_.size() - 1;
    const int bound = ascents_[i - 1] + 1;
    if (word_[i] >= bound) {
      word_.pop_back();
      ascents_.pop_back();
      continue;
    }
    ++word_[i];
    ascents_[i] = ascents_[i - 1] + (word_[i] > word_[i - 1] ? 1 : 0);
    if (!prefix_ok(word_.size())) continue;
    if (extend_from()) return true;
  }
  return false;
}

AscentSequenceRange::iterator& AscentSequenceRange::iterator::operator++() {
  done_ = !advance();
  return *this;
}

AscentSequenceRange ascent_sequences_avoiding(std::size_t n, std::vector<int> pattern) {
  if (n == 0) throw std::invalid_argument("ascent sequences need n >= 1");
  return AscentSequenceRange(n, std::move(pattern));
}

// Fishburn ---------------------------------------------------------------------

const BivincularPattern& fishburn_pattern() {
  static const BivincularPattern bp(Permutation{2, 3, 1}, {1}, {1});
  return bp;
}

bool is_fishburn(const Permutation& p) { return !contains_bivincular(p, fishburn_pattern()); }

std::vector<Permutation> collect_fishburn_avoiding(std::size_t n, const Permutation& classical,
                                                   Parallelism par) {
  auto parts = scan_by_first_entry(
      n, par, [] { return std::vector<Permutation>{}; },
      [&](std::vector<Permutation>& acc, std::span<const int> word) {
        if (contains(word, classical)) return;
        Permutation p = Permutation::unchecked(std::vector<int>(word.begin(), word.end()));
        if (is_fishburn(p)) acc.push_back(std::move(p));
      });
  std::vector<Permutation> all;
  for (auto& part : parts)
    for (auto& p : part) all.push_back(std::move(p));
  return all;
}

// Joint distributions -------------------------------------------------------

std::string_view to_string(Family f) {
  switch (f) {
    case Family::sort312:
      return "Sort(312)";
    case Family::fishburn3412:
      return "F(3412)";
    case Family::ascent201:
      return "A(201)";
  }
  return "?";
}

Count JointDistribution::total() const {
  Count t = 0;
  for (const auto& [pair, c] : counts) t += c;
  return t;
}

JointDistribution joint_distribution(Family family, std::size_t n, const ExploreOptions& opt) {
  switch (family) {
    case Family::sort312: {
      struct Acc {
        SigmaStack stack{p312()};
        std::vector<int> out;
        PairCounts counts;
      };
      auto parts = scan_by_first_entry(
          n, opt.par, [] { return Acc{}; },
          [](Acc& acc, std::span<const int> word) {
            acc.stack.run(word, acc.out);
            if (contains(acc.out, p231())) return;
            ++acc.counts[{stat(word, Statistic::lr_max), stat(word, Statistic::rl_max)}];
          });
      std::vector<PairCounts> counts;
      for (auto& a : parts) counts.push_back(std::move(a.counts));
      return fold(family, n, counts);
    }
    case Family::fishburn3412: {
      auto parts = scan_by_first_entry(
          n, opt.par, [] { return PairCounts{}; },
          [](PairCounts& acc, std::span<const int> word) {
            if (contains(word, p3412())) return;
            if (!is_fishburn(Permutation::unchecked(std::vector<int>(word.begin(), word.end())))) return;
            ++acc[{stat(word, Statistic::lr_max), stat(word, Statistic::lr_min)}];
          });
      return fold(family, n, parts);
    }
    case Family::ascent201: {
      PairCounts counts;
      if (n > 0)
        for (const AscentSequence& a : ascent_sequences_avoiding(n, word201()))
          ++counts[{rl_minima(a.letters(), opt.ascent_minima), zeros(a)}];
      return fold(family, n, {counts});
    }
  }
  throw std::invalid_argument("unknown family");
}

DistributionComparison compare(const JointDistribution& a, const JointDistribution& b) {
  std::set<StatPair> keys;
  for (const auto& [p, c] : a.counts) keys.insert(p);
  for (const auto& [p, c] : b.counts) keys.insert(p);
  for (const StatPair& p : keys) {
    const auto ia = a.counts.find(p);
    const auto ib = b.counts.find(p);
    const Count ca = ia == a.counts.end() ? Count(0) : ia->second;
    const Count cb = ib == b.counts.end() ? Count(0) : ib->second;
    if (ca != cb) return {false, p, ca, cb};
  }
  return {};
}

std::string render_exploration(std::size_t max_n, const ExploreOptions& opt) {
  std::string out;
  out += "# Sort(312): (lr_max, rl_max); F(3412): (lr_max, lr_min); A(201): (rl_min, zeros)\n";
  out += "# Fishburn permutations avoid " + fishburn_pattern().to_string() + "\n";
  out += "# ascent sequence rl_min: " + std::string(to_string(opt.ascent_minima)) + "\n";
  out += "# rl_min conventions matching for n <= 4: " + conventions_text(matching_conventions(opt)) + "\n";
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto ds = all_three(n, opt);
    out += "n = " + std::to_string(n) + "\n";
    for (const auto& d : ds) {
      out += family_heading(d.family) + ", total " + d.total().str() + "\n";
      for (const auto& [pair, c] : d.counts) out += "  " + pair_text(pair) + " → " + c.str() + "\n";
    }
    const auto eq = check_equidistribution(ds);
    out += eq.equal ? "EQUIDISTRIBUTED: yes\n" : "EQUIDISTRIBUTED: no (first mismatch: " + eq.mismatch + ")\n";
  }
  return out;
}

VerificationReport verify_conjectures(std::size_t max_card_n, std::size_t max_joint_n,
                                      const ExploreOptions& opt) {
  VerificationReport report;
  const auto& fish = fishburn_numbers();
  for (std::size_t n = 1; n <= std::min(max_card_n, fish.size()); ++n) {
    std::size_t count = 0;
    for (const Permutation& p : all_permutations(n))
      if (is_fishburn(p)) ++count;
    report.lines.push_back(ReportLine{"conj-fishburn", "-", n, count == fish[n - 1] ? Verdict::pass : Verdict::fail,
                                      "|F_n| = " + std::to_string(count) + ", Fishburn number " +
                                          std::to_string(fish[n - 1])});
  }

  const std::vector<std::uint64_t>* published312 = nullptr;
  for (const auto& row : published::sortable_counts())
    if (row.sigma == "312") published312 = &row.values;

  for (std::size_t n = 1; n <= max_card_n; ++n) {
    const Count sort = count_sortable(n, p312(), opt.par);
    const Count fishburn = Count(collect_fishburn_avoiding(n, p3412(), opt.par).size());
    Count ascent = 0;
    for (const AscentSequence& a : ascent_sequences_avoiding(n, word201())) {
      (void)a;
      ++ascent;
    }
    bool ok = sort == fishburn && fishburn == ascent;
    if (published312 && n <= published312->size()) ok = ok && sort == (*published312)[n - 1];
    report.lines.push_back(ReportLine{"conj-card", "-", n, ok ? Verdict::pass : Verdict::fail,
                                      "Sort(312) " + sort.str() + ", F(3412) " + fishburn.str() + ", A(201) " +
                                          ascent.str()});
  }

  report.lines.push_back(ReportLine{"conj-convention", "-", 0, Verdict::finding,
                                    "active rl_min convention " + std::string(to_string(opt.ascent_minima)) +
                                        "; conventions matching for n <= 4: " +
                                        conventions_text(matching_conventions(opt))});

  for (std::size_t n = 1; n <= max_joint_n; ++n) {
    const auto eq = check_equidistribution(all_three(n, opt));
    report.lines.push_back(ReportLine{"conj-joint", "-", n, eq.equal ? Verdict::pass : Verdict::finding,
                                      eq.equal ? "" : "first mismatch: " + eq.mismatch});
  }
  report.sort();
  return report;
}

}  // namespace sigstack
