#pragma once

// Text, JSON and CSV renderings of every result type. JSON field order is
// fixed and no timings are emitted, so identical inputs give identical bytes.

#include "dyck_paths.hpp"
#include "harness.hpp"
#include "west_bijection.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace stacksort {

enum class Format { Text, Json, Csv };

Format parse_format(std::string_view name);

// Both stacks of the machine: the pattern stack, then West's stack on its output.
std::string render_trace(const Machine& machine, const Permutation& x, Format format);

std::string render_enumeration(const EnumerationResult& result, Format format);

std::string render_suites(const std::vector<SuiteResult>& suites, Format format);

std::string render_signature(const Permutation& x, const ClassicalPattern& pattern, Format format);

std::string render_west_map(const Permutation& x, WestDirection direction, Format format);

std::string render_dyck(const Permutation& x, Format format);

std::string render_sequences(const std::vector<SequenceTable>& tables, Format format);

std::string render_conjecture(const ConjectureResult& result, Format format);

} // namespace stacksort
