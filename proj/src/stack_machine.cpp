#include "sigstack/stack_machine.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace sigstack {

namespace {

const Permutation& pattern_21() {
  static const Permutation p{2, 1};
  return p;
}

const Permutation& pattern_231() {
  static const Permutation p{2, 3, 1};
  return p;
}

std::string join_word(const std::vector<int>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace

SigmaStack::SigmaStack(Permutation forbidden) : forbidden_(std::move(forbidden)) {
  const std::size_t k = forbidden_.size();
  if (k < 2) throw std::invalid_argument("sigma-stack needs a forbidden pattern of length >= 2");
  below_.assign(k, std::vector<bool>(k, false));
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t l = 0; l < m; ++l) below_[m][l] = forbidden_[l] < forbidden_[m];
  chosen_.resize(k);
}

// chosen_[0..m) hold the values already matched to forbidden[0..m); the next
// one is searched among the content at top-to-bottom depth >= `depth`.
bool SigmaStack::extend(std::span<const int> content, std::size_t m, std::size_t depth) const {
  const std::size_t k = forbidden_.size();
  const std::size_t size = content.size();
  for (std::size_t d = depth; d + (k - m) <= size; ++d) {
    const int v = content[size - 1 - d];
    bool ok = true;
    for (std::size_t l = 0; l < m && ok; ++l) ok = below_[m][l] == (chosen_[l] < v);
    if (!ok) continue;
    if (m + 1 == k) return true;
    chosen_[m] = v;
    if (extend(content, m + 1, d + 1)) return true;
  }
  return false;
}

bool SigmaStack::push_allowed(std::span<const int> content, int candidate) const {
  if (content.size() + 1 < forbidden_.size()) return true;
  chosen_[0] = candidate;
  return !extend(content, 1, 0);
}

template <class OnEvent>
void SigmaStack::run_impl(std::span<const int> input, std::vector<int>& output, OnEvent on_event) {
  output.clear();
  content_.clear();
  std::size_t next = 0;
  // The final drain is the same loop with the input exhausted.
  while (next < input.size() || !content_.empty()) {
    if (next < input.size() && push_allowed(content_, input[next])) {
      content_.push_back(input[next]);
      on_event(StackOp::push, input[next]);
      ++next;
    } else {
      const int top = content_.back();
      content_.pop_back();
      output.push_back(top);
      on_event(StackOp::pop, top);
    }
  }
}

void SigmaStack::run(std::span<const int> input, std::vector<int>& output) {
  run_impl(input, output, [](StackOp, int) {});
}

void SigmaStack::run(std::span<const int> input, std::vector<int>& output, MachineTrace& trace) {
  trace.clear();
  run_impl(input, output, [&trace](StackOp op, int v) { trace.push_back({op, v}); });
}

Permutation map_sigma(const Permutation& sigma, const Permutation& pi) {
  SigmaStack stack(sigma);
  std::vector<int> out;
  stack.run(pi.values(), out);
  return Permutation::unchecked(std::move(out));
}

TracedOutput map_sigma_traced(const Permutation& sigma, const Permutation& pi) {
  SigmaStack stack(sigma);
  std::vector<int> out;
  MachineTrace trace;
  stack.run(pi.values(), out, trace);
  return {Permutation::unchecked(std::move(out)), std::move(trace)};
}

Permutation machine_output(const Permutation& sigma, const Permutation& pi) {
  return map_sigma(pattern_21(), map_sigma(sigma, pi));
}

bool is_sortable(const Permutation& sigma, const Permutation& pi) {
  return !contains(map_sigma(sigma, pi), pattern_231());
}

std::vector<StackState> replay_states(const Permutation& sigma, const Permutation& pi,
                                      const MachineTrace& trace) {
  StackState state{sigma, {}, std::vector<int>(pi.begin(), pi.end()), {}};
  std::vector<StackState> states;
  states.reserve(trace.size());
  for (const StackEvent& e : trace) {
    if (e.op == StackOp::push) {
      if (state.remaining_input.empty() || state.remaining_input.front() != e.value)
        throw std::invalid_argument("trace pushes " + std::to_string(e.value) +
                                    " out of input order");
      state.remaining_input.erase(state.remaining_input.begin());
      state.content.insert(state.content.begin(), e.value);
    } else {
      if (state.content.empty() || state.content.front() != e.value)
        throw std::invalid_argument("trace pops " + std::to_string(e.value) +
                                    " which is not on top");
      state.content.erase(state.content.begin());
      state.output.push_back(e.value);
    }
    states.push_back(state);
  }
  return states;
}

Permutation trace_output(const MachineTrace& trace) {
  std::vector<int> out;
  for (const StackEvent& e : trace)
    if (e.op == StackOp::pop) out.push_back(e.value);
  return Permutation(std::move(out));
}

std::string format_trace_events(const MachineTrace& trace) {
  std::string out;
  for (const StackEvent& e : trace) {
    out += e.op == StackOp::push ? "push " : "pop ";
    out += std::to_string(e.value);
    out += '\n';
  }
  return out;
}

MachineTrace parse_trace_events(std::string_view text) {
  MachineTrace trace;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string op;
    int value = 0;
    std::string rest;
    if (!(ls >> op >> value) || (ls >> rest) || (op != "push" && op != "pop"))
      throw ParseError("malformed trace line '" + line + "'");
    trace.push_back({op == "push" ? StackOp::push : StackOp::pop, value});
  }
  return trace;
}

nlohmann::json trace_to_json(const MachineTrace& trace) {
  auto arr = nlohmann::json::array();
  for (const StackEvent& e : trace)
    arr.push_back({{"op", e.op == StackOp::push ? "push" : "pop"}, {"value", e.value}});
  return arr;
}

MachineTrace trace_from_json(const nlohmann::json& j) {
  MachineTrace trace;
  if (!j.is_array()) throw ParseError("trace JSON must be an array");
  for (const auto& item : j) {
    const std::string op = item.at("op").get<std::string>();
    if (op != "push" && op != "pop") throw ParseError("unknown trace op '" + op + "'");
    trace.push_back({op == "push" ? StackOp::push : StackOp::pop, item.at("value").get<int>()});
  }
  return trace;
}

std::string render_trace_table(const Permutation& sigma, const Permutation& pi,
                               const MachineTrace& trace) {
  const auto states = replay_states(sigma, pi, trace);
  std::vector<std::array<std::string, 5>> rows;
  rows.push_back({"step", "op", "input", "stack (top..bottom)", "output"});
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& s = states[i];
    rows.push_back({std::to_string(i + 1),
                    (trace[i].op == StackOp::push ? "push " : "pop ") + std::to_string(trace[i].value),
                    join_word(s.remaining_input), join_word(s.content), join_word(s.output)});
  }
  std::array<std::size_t, 5> width{};
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());

  std::ostringstream out;
  out << sigma.compact() << "-stack on input " << pi.compact() << "\n";
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      out << std::left << std::setw(static_cast<int>(width[c])) << r[c];
      if (c + 1 < r.size()) out << " | ";
    }
    out << '\n';
  }
  std::string text = out.str();
  // setw pads the last column too; drop trailing blanks per line.
  std::string trimmed;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    trimmed += line + '\n';
  }
  return trimmed;
}

}  // namespace sigstack
