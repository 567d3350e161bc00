#pragma once

// Right-greedy pattern-avoiding stacks, West's stack-sorting map, and the
// two-stack (sigma, tau)-machine s o s_{sigma,tau}.

#include "perm_core.hpp"

#include <optional>
#include <vector>

namespace stacksort {

enum class StackAction { Push, PopBlocked, PopFlush };

const char* to_string(StackAction action) noexcept;

// State after one move. The stack is listed top first.
struct StackStep {
  StackAction action;
  Value moved_value;
  std::vector<Value> input_rest;
  std::vector<Value> stack_top_to_bottom;
  std::vector<Value> output_so_far;
};

struct StackTrace {
  PatternSet machine;
  Permutation input;
  std::vector<StackStep> steps;
  Permutation output;
};

// s_T(x). The next input value is pushed unless the stack, read top to bottom
// with that value on top, would contain a pattern of T; in that case the top
// is popped to the output and the test repeats. Leftover entries are flushed
// once the input is exhausted.
Permutation pattern_stack_pass(const Permutation& x, const PatternSet& patterns);

StackTrace pattern_stack_trace(const Permutation& x, const PatternSet& patterns);

// West's map s: the stack must stay increasing from top to bottom.
Permutation west_pass(const Permutation& x);

// How is_sortable decides. Knuth uses 231-avoidance of the first-stack output;
// CrossChecked additionally runs the second stack and throws Internal if the
// two answers disagree.
enum class SortCheck { Knuth, CrossChecked };

// The (sigma, tau)-machine, or the single sigma-machine when tau is absent.
class Machine {
public:
  Machine(ClassicalPattern sigma, std::optional<ClassicalPattern> tau = std::nullopt);

  static Machine parse(std::string_view sigma, std::string_view tau = {});

  const ClassicalPattern& sigma() const noexcept { return sigma_; }
  const std::optional<ClassicalPattern>& tau() const noexcept { return tau_; }
  const PatternSet& first_stack() const noexcept { return patterns_; }

  // "132,321" or "132".
  std::string name() const { return patterns_.name(); }

  Permutation first_pass(const Permutation& x) const { return pattern_stack_pass(x, patterns_); }
  Permutation run(const Permutation& x) const { return west_pass(first_pass(x)); }
  bool sorts(const Permutation& x, SortCheck check = SortCheck::Knuth) const;

private:
  ClassicalPattern sigma_;
  std::optional<ClassicalPattern> tau_;
  PatternSet patterns_;
};

Permutation machine(const Permutation& x, const ClassicalPattern& sigma, const ClassicalPattern& tau);

bool is_sortable(const Permutation& x, const ClassicalPattern& sigma, const ClassicalPattern& tau,
                 SortCheck check = SortCheck::Knuth);

} // namespace stacksort
