#include "sigstack/enumeration.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace sigstack {

namespace {

const Permutation& pattern_231() {
  static const Permutation p{2, 3, 1};
  return p;
}

// 4 bits per entry; enumerations never go past n = 16.
std::uint64_t pack(std::span<const int> word) {
  std::uint64_t key = 0;
  for (int v : word) key = (key << 4) | static_cast<std::uint64_t>(v - 1);
  return key;
}

Permutation unpack(std::uint64_t key, std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = static_cast<int>(key & 0xF) + 1;
    key >>= 4;
  }
  return Permutation::unchecked(std::move(v));
}

void check_packable(std::size_t n) {
  if (n > 16) throw std::invalid_argument("enumeration limited to n <= 16");
}

struct StackWorker {
  explicit StackWorker(const Permutation& sigma) : stack(sigma) {}

  SigmaStack stack;
  std::vector<int> out;
};

using KeyCounts = std::unordered_map<std::uint64_t, std::uint64_t>;

// Preimage counts under map_sigma over S_n, optionally only 231-avoiding
// images (the sigma-sorted ones).
std::map<Permutation, Count> preimage_counts(std::size_t n, const Permutation& sigma,
                                             bool sorted_only, Parallelism par) {
  check_packable(n);
  struct Acc {
    StackWorker worker;
    KeyCounts counts;
  };
  auto parts = scan_by_first_entry(
      n, par, [&] { return Acc{StackWorker(sigma), {}}; },
      [&](Acc& acc, std::span<const int> word) {
        acc.worker.stack.run(word, acc.worker.out);
        if (sorted_only && contains(acc.worker.out, pattern_231())) return;
        ++acc.counts[pack(acc.worker.out)];
      });
  std::map<Permutation, Count> merged;
  for (const Acc& acc : parts)
    for (const auto& [key, c] : acc.counts) merged[unpack(key, n)] += c;
  return merged;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

Count parse_count(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("invalid count '" + text + "'");
  return Count(text);
}

std::size_t parse_index(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("invalid index '" + text + "'");
  return static_cast<std::size_t>(std::stoull(text));
}

}  // namespace

std::vector<Permutation> collect_sortable(std::size_t n, const Permutation& sigma, Parallelism par) {
  struct Acc {
    StackWorker worker;
    std::vector<Permutation> found;
  };
  auto parts = scan_by_first_entry(
      n, par, [&] { return Acc{StackWorker(sigma), {}}; },
      [&](Acc& acc, std::span<const int> word) {
        acc.worker.stack.run(word, acc.worker.out);
        if (!contains(acc.worker.out, pattern_231()))
          acc.found.push_back(Permutation::unchecked(std::vector<int>(word.begin(), word.end())));
      });
  std::vector<Permutation> all;
  for (auto& acc : parts)
    for (auto& p : acc.found) all.push_back(std::move(p));
  return all;
}

Count count_sortable(std::size_t n, const Permutation& sigma, Parallelism par) {
  struct Acc {
    StackWorker worker;
    std::uint64_t count = 0;
  };
  auto parts = scan_by_first_entry(
      n, par, [&] { return Acc{StackWorker(sigma), 0}; },
      [&](Acc& acc, std::span<const int> word) {
        acc.worker.stack.run(word, acc.worker.out);
        if (!contains(acc.worker.out, pattern_231())) ++acc.count;
      });
  Count total = 0;
  for (const Acc& acc : parts) total += acc.count;
  return total;
}

Count SortedProfile::total() const {
  Count t = 0;
  for (const auto& [gamma, c] : entries) t += c;
  return t;
}

SortedProfile sorted_profile(std::size_t n, const Permutation& sigma, Parallelism par) {
  return SortedProfile{n, sigma, preimage_counts(n, sigma, true, par)};
}

Count count_sorted(std::size_t n, const Permutation& sigma, Parallelism par) {
  return Count(sorted_profile(n, sigma, par).entries.size());
}

std::map<Permutation, Count> image_profile(std::size_t n, const Permutation& sigma, Parallelism par) {
  return preimage_counts(n, sigma, false, par);
}

Count fertility(const Permutation& sigma, const Permutation& gamma, Parallelism par) {
  struct Acc {
    StackWorker worker;
    std::uint64_t count = 0;
  };
  const std::vector<int> target(gamma.begin(), gamma.end());
  auto parts = scan_by_first_entry(
      gamma.size(), par, [&] { return Acc{StackWorker(sigma), 0}; },
      [&](Acc& acc, std::span<const int> word) {
        acc.worker.stack.run(word, acc.worker.out);
        if (acc.worker.out == target) ++acc.count;
      });
  Count total = 0;
  for (const Acc& acc : parts) total += acc.count;
  return total;
}

Count count_sortable_123_formula(std::size_t n) {
  Count total = 1;
  for (std::size_t j = 1; j < n; ++j) total += Count(n - j) * catalan(static_cast<unsigned>(j));
  return total;
}

std::optional<GammaTriple> gamma_decomposition_123(const Permutation& gamma) {
  const std::size_t n = gamma.size();
  for (std::size_t i = n; i-- > 0;) {
    // Prefix must be n, n-1, ..., n-i+1.
    bool prefix = true;
    for (std::size_t a = 0; a < i && prefix; ++a) prefix = gamma[a] == static_cast<int>(n - a);
    if (!prefix) continue;
    // The rest is dec(j) direct dec(k) on 1..n-i: it opens with j.
    const std::size_t j = static_cast<std::size_t>(gamma[i]);
    const std::size_t k = n - i - j;
    if (j < 1 || j > n - i) continue;
    bool ok = true;
    for (std::size_t a = 0; a < j && ok; ++a) ok = gamma[i + a] == static_cast<int>(j - a);
    for (std::size_t a = 0; a < k && ok; ++a) ok = gamma[i + j + a] == static_cast<int>(j + k - a);
    if (ok) return GammaTriple{i, j, k};
  }
  return std::nullopt;
}

Count fertility_123_law(const GammaTriple& t) {
  return t.k == 0 ? Count(1) : catalan(static_cast<unsigned>(t.j));
}

std::string emit_csv(const std::vector<SequenceRow>& rows) {
  std::string out = "n,count\n";
  for (const auto& r : rows) out += std::to_string(r.n) + "," + r.count.str() + "\n";
  return out;
}

std::string emit_bfile(const std::vector<SequenceRow>& rows) {
  std::string out;
  for (const auto& r : rows) out += std::to_string(r.n) + " " + r.count.str() + "\n";
  return out;
}

nlohmann::json count_to_json(const Count& c) {
  if (c >= 0 && c <= std::numeric_limits<std::uint64_t>::max())
    return nlohmann::json(static_cast<std::uint64_t>(c));
  return nlohmann::json(c.str());
}

Count count_from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return Count(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return Count(j.get<std::int64_t>());
  if (j.is_string()) return parse_count(j.get<std::string>());
  throw ParseError("count must be a non-negative integer or decimal string");
}

std::string emit_json(const std::vector<SequenceRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back({{"n", r.n}, {"count", count_to_json(r.count)}});
  return arr.dump() + "\n";
}

std::string emit_plain(const std::vector<SequenceRow>& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ' ';
    out += rows[i].count.str();
  }
  return out + "\n";
}

std::vector<SequenceRow> parse_csv(std::string_view text) {
  std::vector<SequenceRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (first && line == "n,count") {
      first = false;
      continue;
    }
    first = false;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("csv row without comma: '" + line + "'");
    rows.push_back({parse_index(trim(line.substr(0, comma))), parse_count(trim(line.substr(comma + 1)))});
  }
  return rows;
}

std::vector<SequenceRow> parse_bfile(std::string_view text) {
  std::vector<SequenceRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra)) throw ParseError("malformed b-file line '" + line + "'");
    rows.push_back({parse_index(a), parse_count(b)});
  }
  return rows;
}

std::vector<SequenceRow> parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_array()) throw ParseError("sequence JSON must be an array");
  std::vector<SequenceRow> rows;
  for (const auto& item : j)
    rows.push_back({item.at("n").get<std::size_t>(), count_from_json(item.at("count"))});
  return rows;
}

nlohmann::json profile_to_json(const SortedProfile& profile) {
  auto obj = nlohmann::json::object();
  for (const auto& [gamma, c] : profile.entries) obj[gamma.to_string()] = count_to_json(c);
  return obj;
}

std::map<Permutation, Count> profile_entries_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("profile JSON must be an object");
  std::map<Permutation, Count> entries;
  for (const auto& [key, value] : j.items()) entries[parse_permutation(key)] = count_from_json(value);
  return entries;
}

}  // namespace sigstack
