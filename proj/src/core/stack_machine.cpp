#include "stack_machine.hpp"

#include <algorithm>

namespace stacksort {

namespace {

const ClassicalPattern& pattern_231()
{
  static const ClassicalPattern p = ClassicalPattern::parse("231");
  return p;
}

void check_patterns(const PatternSet& patterns)
{
  if (patterns.empty())
    throw Error(ErrorCode::EmptyPatternSet, "a pattern stack needs at least one pattern");
  for (const auto& p : patterns.classical) {
    if (p.size() < 2)
      throw Error(ErrorCode::InvalidArgument, "stack patterns must have length at least 2");
  }
  for (const auto& p : patterns.bivincular) {
    if (p.size() < 2)
      throw Error(ErrorCode::InvalidArgument, "stack patterns must have length at least 2");
  }
}

// Shared loop for the traced and untraced passes. The stack holds its bottom
// at index 0. Since the stack avoids T before every push test, any new
// occurrence must use the candidate top, which comes first when reading top to
// bottom; the anchored search checks exactly those occurrences.
template <typename OnStep>
Permutation run_pass(const Permutation& x, const PatternSet& patterns, OnStep&& on_step)
{
  check_patterns(patterns);
  const auto input = x.entries();
  std::vector<Value> stack;
  std::vector<Value> output;
  std::vector<Value> probe;
  stack.reserve(input.size());
  output.reserve(input.size());
  probe.reserve(input.size() + 1);

  auto blocked = [&](Value v) {
    probe.clear();
    probe.push_back(v);
    probe.insert(probe.end(), stack.rbegin(), stack.rend());
    return occurs_any(probe, patterns, Anchor::First);
  };

  for (std::size_t i = 0; i < input.size(); ++i) {
    const Value v = input[i];
    while (!stack.empty() && blocked(v)) {
      output.push_back(stack.back());
      stack.pop_back();
      on_step(StackAction::PopBlocked, output.back(), i, stack, output);
    }
    stack.push_back(v);
    on_step(StackAction::Push, v, i + 1, stack, output);
  }
  while (!stack.empty()) {
    output.push_back(stack.back());
    stack.pop_back();
    on_step(StackAction::PopFlush, output.back(), input.size(), stack, output);
  }
  return PermutationBuilder::adopt(std::move(output));
}

} // namespace

const char* to_string(StackAction action) noexcept
{
  switch (action) {
  case StackAction::Push: return "PUSH";
  case StackAction::PopBlocked: return "POP_BLOCKED";
  case StackAction::PopFlush: return "POP_FLUSH";
  }
  return "?";
}

Permutation pattern_stack_pass(const Permutation& x, const PatternSet& patterns)
{
  return run_pass(x, patterns, [](StackAction, Value, std::size_t, const auto&, const auto&) {});
}

StackTrace pattern_stack_trace(const Permutation& x, const PatternSet& patterns)
{
  StackTrace trace{patterns, x, {}, {}};
  const auto input = x.entries();
  trace.output = run_pass(x, patterns,
                          [&](StackAction action, Value moved, std::size_t consumed,
                              const std::vector<Value>& stack, const std::vector<Value>& output) {
                            StackStep step;
                            step.action = action;
                            step.moved_value = moved;
                            step.input_rest.assign(input.begin() + static_cast<std::ptrdiff_t>(consumed),
                                                   input.end());
                            step.stack_top_to_bottom.assign(stack.rbegin(), stack.rend());
                            step.output_so_far = output;
                            trace.steps.push_back(std::move(step));
                          });
  return trace;
}

Permutation west_pass(const Permutation& x)
{
  std::vector<Value> stack;
  std::vector<Value> output;
  stack.reserve(static_cast<std::size_t>(x.size()));
  output.reserve(static_cast<std::size_t>(x.size()));
  for (const Value v : x) {
    while (!stack.empty() && stack.back() < v) {
      output.push_back(stack.back());
      stack.pop_back();
    }
    stack.push_back(v);
  }
  output.insert(output.end(), stack.rbegin(), stack.rend());
  return PermutationBuilder::adopt(std::move(output));
}

Machine::Machine(ClassicalPattern sigma, std::optional<ClassicalPattern> tau)
    : sigma_(std::move(sigma)), tau_(std::move(tau))
{
  if (tau_ && *tau_ == sigma_)
    throw Error(ErrorCode::DegeneratePair, "sigma and tau must differ (both are " + sigma_.name() + ")");
  patterns_.classical.push_back(sigma_);
  if (tau_)
    patterns_.classical.push_back(*tau_);
  check_patterns(patterns_);
}

Machine Machine::parse(std::string_view sigma, std::string_view tau)
{
  if (tau.empty())
    return Machine(ClassicalPattern::parse(sigma));
  return Machine(ClassicalPattern::parse(sigma), ClassicalPattern::parse(tau));
}

bool Machine::sorts(const Permutation& x, SortCheck check) const
{
  const Permutation first = first_pass(x);
  const bool sortable = !contains_classical(first, pattern_231());
  if (check == SortCheck::CrossChecked && sortable != west_pass(first).is_identity()) {
    throw Error(ErrorCode::Internal,
                "231-avoidance and the identity check disagree on " + x.to_string());
  }
  return sortable;
}

Permutation machine(const Permutation& x, const ClassicalPattern& sigma, const ClassicalPattern& tau)
{
  return Machine(sigma, tau).run(x);
}

bool is_sortable(const Permutation& x, const ClassicalPattern& sigma, const ClassicalPattern& tau,
                 SortCheck check)
{
  return Machine(sigma, tau).sorts(x, check);
}

} // namespace stacksort
