#pragma once

/// \file
/// The sigma-stack operator and the two-stack sigma-machine.
///
/// A sigma-stack may never hold an occurrence of sigma, reading its content
/// from top to bottom. It is run greedily: push the next input entry whenever
/// the result stays sigma-avoiding, otherwise pop the top to the output; when
/// the input is exhausted the stack is drained. The sigma-machine feeds that
/// output through a 21-stack (a classical increasing stack).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "sigstack/permutation.hpp"

namespace sigstack {

enum class StackOp { push, pop };

struct StackEvent {
  StackOp op;
  int value;

  friend bool operator==(const StackEvent&, const StackEvent&) = default;
};

using MachineTrace = std::vector<StackEvent>;

/// Snapshot of one sigma-stack between two events.
struct StackState {
  Permutation forbidden;
  std::vector<int> content;          // top to bottom
  std::vector<int> remaining_input;
  std::vector<int> output;
};

/// Reusable sigma-stack. Holds scratch space, so one instance per thread.
class SigmaStack {
 public:
  /// Throws std::invalid_argument if |forbidden| < 2.
  explicit SigmaStack(Permutation forbidden);

  const Permutation& forbidden() const noexcept { return forbidden_; }

  /// Runs the greedy pass; `output` is overwritten.
  void run(std::span<const int> input, std::vector<int>& output);
  void run(std::span<const int> input, std::vector<int>& output, MachineTrace& trace);

  /// Whether `candidate` may go on top of `content` (stored bottom first).
  /// Only occurrences that use the candidate as their first entry are
  /// searched: the content already avoids the forbidden pattern.
  bool push_allowed(std::span<const int> content, int candidate) const;

 private:
  template <class OnEvent>
  void run_impl(std::span<const int> input, std::vector<int>& output, OnEvent on_event);
  bool extend(std::span<const int> content, std::size_t m, std::size_t depth) const;

  Permutation forbidden_;
  std::vector<std::vector<bool>> below_;  // below_[m][l]: forbidden[l] < forbidden[m]
  mutable std::vector<int> chosen_;
  std::vector<int> content_;
};

Permutation map_sigma(const Permutation& sigma, const Permutation& pi);

struct TracedOutput {
  Permutation output;
  MachineTrace trace;
};

TracedOutput map_sigma_traced(const Permutation& sigma, const Permutation& pi);

/// map_21(map_sigma(pi)).
Permutation machine_output(const Permutation& sigma, const Permutation& pi);

/// True iff map_sigma(pi) avoids 231, i.e. the 21-stack can finish the job.
bool is_sortable(const Permutation& sigma, const Permutation& pi);

/// Replays a trace from an empty stack. Returns the state after every event
/// (so the result has trace.size() entries, the last one with empty stack and
/// input). Throws std::invalid_argument if the trace pops an empty stack or
/// pops a value that is not on top.
std::vector<StackState> replay_states(const Permutation& sigma, const Permutation& pi,
                                      const MachineTrace& trace);

/// Output permutation recorded by a trace (the pop values in order).
Permutation trace_output(const MachineTrace& trace);

/// One event per line: "push v" / "pop v".
std::string format_trace_events(const MachineTrace& trace);
MachineTrace parse_trace_events(std::string_view text);

/// Array of {"op": "push"|"pop", "value": v}.
nlohmann::json trace_to_json(const MachineTrace& trace);
MachineTrace trace_from_json(const nlohmann::json& j);

/// Step table in the layout of a hand-drawn stack diagram: one row per
/// event showing remaining input, stack (top first) and output so far.
std::string render_trace_table(const Permutation& sigma, const Permutation& pi,
                               const MachineTrace& trace);

}  // namespace sigstack
